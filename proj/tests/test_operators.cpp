// Copyright 2026 The qjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>

#include "doctest.h"
#include "qjones/catalog.hpp"
#include "qjones/format.hpp"
#include "qjones/jones.hpp"
#include "qjones/qoperator.hpp"

using namespace qjones;

namespace {

using P = LaurentPoly<Rational>;

P qpoly(std::initializer_list<std::pair<int, Rational>> t) {
  std::vector<std::pair<int, Rational>> v(t);
  return P::from_terms(v, Var::q);
}

QDiffOperator e_minus_1() { return parse_operator("knot unknot\nvars q Q E\nterm 1 0 0 1\nterm -1 0 0 0\n"); }

QSequence jones41_sequence(int n) {
  QSequence J;
  for (int N = 1; N <= n; ++N) J.push_back(jones_41(N));
  return J;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("parse and serialize") {
    const QDiffOperator A = e_minus_1();
    CHECK(A.knot == "unknot");
    CHECK(A.degree() == 1);
    CHECK(parse_operator(serialize_operator(A)) == A);
    const QDiffOperator B = builtin_operator_41();
    CHECK(B.degree() == 3);
    CHECK(parse_operator(serialize_operator(B)) == B);
    // header lines may be omitted, comments are ignored
    CHECK(parse_operator("# E - 1\nterm 1 0 0 1   # shift\nterm -1 0 0 0\n") == A);
  }

  TEST_CASE("parse errors carry line numbers") {
    const auto line_of = [](const std::string& text) {
      try {
        parse_operator(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("knot x\nvars q Q E\nterm 1 0 0\n") == 3);
    CHECK(line_of("knot x\nvars q Q E\nterm 1 0 0 1\nterm 2 0 0 1\n") == 4);
    CHECK(line_of("knot x\nterm 1 0 0 -1\n") == 2);
    CHECK(line_of("knot x\nfoo 1\n") == 2);
    CHECK(line_of("knot x\nvars q Q E\nterm one 0 0 1\n") == 3);
    CHECK_THROWS_AS(parse_operator("knot x\n"), ParseError);
    CHECK_THROWS_AS(load_operator("/nonexistent/op.txt"), ValidationError);
  }

  TEST_CASE("normal form") {
    const QDiffOperator A = builtin_operator_41();
    CHECK(normalize_operator(A) == A);
    const QDiffOperator raw = raw_operator_41();
    CHECK(normalize_operator(raw) == A);
    QDiffOperator scaled = A;
    for (auto& c : scaled.coeffs) c = -(c.shifted(3, -2));
    CHECK(normalize_operator(scaled) == A);
    // a common E factor on the left is removed
    QDiffOperator shifted = e_minus_1();
    shifted.coeffs.insert(shifted.coeffs.begin(), BiPoly('q', 'Q'));
    CHECK(normalize_operator(shifted) == normalize_operator(e_minus_1()));
  }

  TEST_CASE("apply_operator") {
    const QDiffOperator u = e_minus_1();
    const QSequence ones(6, P(1, Var::q));
    for (int N0 = 1; N0 <= 5; ++N0) CHECK(apply_operator(u, ones, N0).is_zero());
    CHECK_THROWS_AS(apply_operator(u, ones, 6), ValidationError);
    CHECK_THROWS_AS(apply_operator(u, ones, 0), ValidationError);

    const QDiffOperator A = builtin_operator_41();
    const QSequence J = jones41_sequence(20);
    for (int N0 = 1; N0 <= 17; ++N0) CHECK(apply_operator(A, J, N0).is_zero());

    QSequence bad = J;
    bad[1] += P(1, Var::q);
    CHECK_FALSE(apply_operator(A, bad, 1).is_zero());

    // linear in the sequence
    QSequence K = J, sum = J;
    for (std::size_t i = 0; i < K.size(); ++i) {
      K[i] = qpoly({{static_cast<int>(i), 1}, {-1, 2}});
      sum[i] = J[i] * Rational(3) + K[i];
    }
    for (int N0 = 1; N0 <= 4; ++N0)
      CHECK(apply_operator(A, sum, N0) == apply_operator(A, J, N0) * Rational(3) + apply_operator(A, K, N0));
  }

  TEST_CASE("specialize_q1") {
    CHECK(to_string(specialize_q1(e_minus_1())) == "-1 + l");
    const QDiffOperator mono = parse_operator("term 1 3 1 1\n");
    CHECK(to_string(specialize_q1(mono)) == "1");
    CHECK(specialize_q1(parse_operator("term 1 3 1 1\nterm -1 0 0 0\n")) == parse_bipoly("l*m^2 - 1", 'l', 'm'));
    const BiPoly a41 = parse_bipoly("l - l*m^2 - m^4 - 2*l*m^4 - l^2*m^4 - l*m^6 + l*m^8", 'l', 'm');
    const BiPoly target = parse_bipoly("l - 1", 'l', 'm') * a41;
    CHECK(divide_exact(specialize_q1(builtin_operator_41()), target).has_value());
  }

  TEST_CASE("hbar_expand") {
    const QDiffOperator mono = parse_operator("term 1 2 1 0\n");
    const HbarTable t = hbar_expand(mono, 2);
    REQUIRE(t.size() == 1);
    CHECK(t[0][0] == P::monomial(1, 2));
    CHECK(t[0][1] == P::monomial(4, 2));
    CHECK(t[0][2] == P::monomial(8, 2));
    CHECK_THROWS_AS(hbar_expand(mono, -1), ValidationError);

    for (const QDiffOperator& A : {builtin_operator_41(), e_minus_1()}) {
      const HbarTable h = hbar_expand(A, 0);
      const BiPoly s = specialize_q1(A);
      BiPoly rebuilt('l', 'm');
      for (std::size_t j = 0; j < h.size(); ++j)
        rebuilt += BiPoly::from_laurent(h[j][0], true, 'l', 'm').shifted(static_cast<int>(j), 0);
      CHECK(rebuilt.unit_normalized() == s);
    }
  }

  TEST_CASE("evaluate_at_index") {
    const BiPoly a = q_monomial(Integer(2), 1, 3) + q_monomial(Integer(-1), 0, 0);
    CHECK(evaluate_at_index(a, 2) == qpoly({{7, 2}, {0, -1}}));
  }

  TEST_CASE("shipped operator files") {
    const QDiffOperator A = load_operator(data_dir() + "/operators/4_1.op");
    CHECK(normalize_operator(A) == builtin_operator_41());
    CHECK(normalize_operator(load_operator(data_dir() + "/operators/unknot.op")) == unknot_operator());
  }
}
