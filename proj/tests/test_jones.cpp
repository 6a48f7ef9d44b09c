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

#include "doctest.h"
#include "qjones/branch.hpp"
#include "qjones/catalog.hpp"
#include "qjones/format.hpp"
#include "qjones/jones.hpp"

using namespace qjones;

namespace {

using P = LaurentPoly<Rational>;

Complex eval_q(const P& p, const Complex& q) {
  return evaluate(p, q, [](const Rational& c) { return to_complex(c); });
}

}  // namespace

TEST_SUITE("jones") {
  TEST_CASE("multisum for 4_1") {
    CHECK(jones_41(1) == P(1, Var::q));
    CHECK(jones_41(2) == P::from_terms({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}, Var::q));
    for (int N = 1; N <= 10; ++N) CHECK(substitute_power(jones_41(N), -1, Var::q) == jones_41(N));
    // J_N(1) = 1
    for (int N = 1; N <= 8; ++N)
      CHECK(evaluate(jones_41(N), Rational(1), [](const Rational& c) { return c; }) == Rational(1));
  }

  TEST_CASE("recursion reproduces the multisum") {
    const KnotRecord rec = knot_record("4_1");
    const JonesSequence s = jones_from_recursion(rec, *rec.initial, 20);
    CHECK(s.provenance == "recursion");
    REQUIRE(s.values.size() == 20);
    for (int N = 1; N <= 20; ++N) CHECK(s.values[static_cast<std::size_t>(N - 1)] == jones_41(N));

    const KnotRecord u = knot_record("unknot");
    const JonesSequence ones = jones_from_recursion(u, QSequence{P(1, Var::q)}, 6);
    for (const auto& v : ones.values) CHECK(v == P(1, Var::q));

    QSequence bad = *rec.initial;
    bad[1] += P(1, Var::q);
    bool detected = false;
    try {
      const JonesSequence b = jones_from_recursion(rec, bad, 12);
      for (int N = 1; N <= 12; ++N) detected |= b.values[static_cast<std::size_t>(N - 1)] != jones_41(N);
    } catch (const ComputationError&) {
      detected = true;
    }
    CHECK(detected);
    CHECK_THROWS_AS(jones_from_recursion(rec, QSequence{P(1, Var::q)}, 5), ValidationError);
  }

  TEST_CASE("numeric evaluation") {
    const KnotRecord rec = knot_record("4_1");
    CHECK(jones_numeric(rec, 37, Complex(0), 128).value == Complex(1));
    CHECK(jones_numeric(knot_record("unknot"), 9, parse_complex("0.3"), 128).value == Complex(1));

    PrecisionGuard g(512);
    const Complex u = parse_complex("0.1");
    const Complex a = jones_numeric(rec, 100, u, 256).value;
    const Complex b = jones_numeric(rec, 100, u, 512).value;
    CHECK(abs(a - b) < Real("1e-60"));

    const Complex pi_i(Real(0), pi_real());
    const Complex z = jones_numeric(rec, 50, pi_i, 256).value;
    const Complex q = exp(Complex(2) * pi_i / Complex(50));
    CHECK(abs(abs(z) - abs(eval_q(jones_41(50), q))) < Real("1e-40"));
  }

  TEST_CASE("numeric evaluation through the recursion") {
    const KnotRecord rec = knot_record("4_1", data_dir() + "/operators/4_1.op", data_dir() + "/initial/4_1.txt");
    KnotRecord no_sum = rec;
    no_sum.has_multisum = false;
    PrecisionGuard g(256);
    const Complex u = parse_complex("0.05+0.02i");
    const Complex x = jones_numeric(no_sum, 24, u, 256).value;
    const Complex y = jones_numeric(rec, 24, u, 256).value;
    CHECK(abs(x - y) < Real("1e-50"));
  }

  TEST_CASE("precision budget") {
    const KnotRecord rec = knot_record("4_1");
    PrecisionGuard g(256);
    // u = 2i: heavy cancellation in the multisum
    CHECK_THROWS_AS(jones_numeric(rec, 200, parse_complex("2i"), 64), PrecisionLoss);
    CHECK_NOTHROW(jones_numeric(rec, 200, parse_complex("2i"), 256));
    CHECK_THROWS_AS(jones_numeric(rec, 0, parse_complex("0.1"), 128), ValidationError);
  }

  TEST_CASE("Kashaev growth") {
    const GrowthReport u = kashaev_growth(knot_record("unknot"), {10, 20, 30}, 128);
    for (const auto& r : u.rows) CHECK(r.estimate == Real(0));

    std::vector<int> Ns;
    for (int N = 100; N <= 500; N += 50) Ns.push_back(N);
    const GrowthReport g = kashaev_growth(knot_record("4_1"), Ns, 256);
    REQUIRE(g.rows.size() == Ns.size());
    // the finite-N estimates approach the limit from above
    for (std::size_t i = 1; i < g.rows.size(); ++i) CHECK(g.rows[i].estimate < g.rows[i - 1].estimate);
    CHECK(g.rows.back().estimate > Real(g.limit));
    CHECK(std::abs(g.limit - volume_41()) < 1e-2);
    CHECK(g.error < 1e-2);
    CHECK_THROWS_AS(kashaev_growth(knot_record("4_1"), {200, 100}, 128), ValidationError);
  }
}
