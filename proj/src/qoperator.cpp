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

#include "qjones/qoperator.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace qjones {

bool QDiffOperator::is_zero() const {
  for (const auto& a : coeffs)
    if (!a.is_zero()) return false;
  return true;
}

BiPoly q_monomial(const Integer& c, int a, int b) { return BiPoly::monomial(c, a, b, 'q', 'Q'); }

namespace {

bool parse_int(const std::string& s, long long& out) {
  try {
    std::size_t used = 0;
    out = std::stoll(s, &used);
    return used == s.size();
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace

QDiffOperator parse_operator(const std::string& text) {
  QDiffOperator A;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<std::tuple<int, int, int>> seen;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "knot") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'knot <name>'");
      A.knot = tok[1];
      continue;
    }
    if (tok[0] == "vars") {
      if (tok.size() != 4 || tok[1] != "q" || tok[2] != "Q" || tok[3] != "E")
        throw ParseError(lineno, "expected 'vars q Q E'");
      continue;
    }
    if (tok[0] != "term") throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    if (tok.size() != 5) throw ParseError(lineno, "expected 'term <c> <a> <b> <j>'");
    long long a = 0, b = 0, j = 0, dummy = 0;
    if (!parse_int(tok[2], a) || !parse_int(tok[3], b) || !parse_int(tok[4], j))
      throw ParseError(lineno, "malformed term exponents");
    const std::string& cs = tok[1];
    if (cs.empty() || (cs.size() > 18 ? cs.find_first_not_of("+-0123456789") != std::string::npos
                                      : !parse_int(cs, dummy)))
      throw ParseError(lineno, "malformed term coefficient");
    if (j < 0) throw ParseError(lineno, "negative E-power");
    if (!seen.insert({static_cast<int>(a), static_cast<int>(b), static_cast<int>(j)}).second)
      throw ParseError(lineno, "duplicate term (" + tok[2] + ", " + tok[3] + ", " + tok[4] + ")");
    const Integer c(cs[0] == '+' ? cs.substr(1) : cs);
    if (static_cast<std::size_t>(j) >= A.coeffs.size()) A.coeffs.resize(static_cast<std::size_t>(j) + 1, BiPoly('q', 'Q'));
    A.coeffs[static_cast<std::size_t>(j)] += q_monomial(c, static_cast<int>(a), static_cast<int>(b));
    any = true;
  }
  if (!any || A.is_zero()) throw ParseError(lineno, "operator has no terms");
  while (A.coeffs.back().is_zero()) A.coeffs.pop_back();
  return A;
}

QDiffOperator load_operator(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open operator file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_operator(ss.str());
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string serialize_operator(const QDiffOperator& A) {
  std::ostringstream out;
  if (!A.knot.empty()) out << "knot " << A.knot << "\n";
  out << "vars q Q E\n";
  for (std::size_t j = 0; j < A.coeffs.size(); ++j) {
    std::vector<std::pair<BiPoly::Key, Integer>> ts(A.coeffs[j].terms().begin(), A.coeffs[j].terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
      return std::pair(x.first.second, x.first.first) < std::pair(y.first.second, y.first.first);
    });
    for (const auto& [k, c] : ts) out << "term " << c.str() << " " << k.first << " " << k.second << " " << j << "\n";
  }
  return out.str();
}

QDiffOperator normalize_operator(const QDiffOperator& A0) {
  if (A0.is_zero()) throw ValidationError("cannot normalize the zero operator");
  QDiffOperator A;
  A.knot = A0.knot;
  std::size_t k = 0;
  while (A0.coeffs[k].is_zero()) ++k;
  std::size_t top = A0.coeffs.size();
  while (A0.coeffs[top - 1].is_zero()) --top;
  // A = E^k B with b_j(q, Q) = a_{j+k}(q, q^-k Q).
  for (std::size_t j = k; j < top; ++j) {
    BiPoly b('q', 'Q');
    for (const auto& [key, c] : A0.coeffs[j].terms())
      b += q_monomial(c, key.first - static_cast<int>(k) * key.second, key.second);
    A.coeffs.push_back(std::move(b));
  }
  Integer g = 0;
  int min_a = 0, min_b = 0;
  bool first = true;
  for (const auto& a : A.coeffs) {
    if (a.is_zero()) continue;
    g = bmp::gcd(g, a.content());
    min_a = first ? a.min_x() : std::min(min_a, a.min_x());
    min_b = first ? a.min_y() : std::min(min_b, a.min_y());
    first = false;
  }
  const BiPoly& lead = A.coeffs.back();
  BiPoly::Key best = lead.terms().begin()->first;
  for (const auto& [key, c] : lead.terms())
    if (std::pair(key.second, key.first) > std::pair(best.second, best.first)) best = key;
  Integer scale = lead.coeff(best.first, best.second) < 0 ? Integer(-1) : Integer(1);
  for (auto& a : A.coeffs) {
    BiPoly r('q', 'Q');
    for (const auto& [key, c] : a.terms()) r += q_monomial(scale * c / g, key.first - min_a, key.second - min_b);
    a = std::move(r);
  }
  return A;
}

LaurentPoly<Rational> evaluate_at_index(const BiPoly& a, int N) {
  LaurentPoly<Rational> r(Var::q);
  for (const auto& [key, c] : a.terms()) r += LaurentPoly<Rational>::monomial(Rational(c), key.first + key.second * N, Var::q);
  return r;
}

LaurentPoly<Rational> apply_operator(const QDiffOperator& A, const QSequence& J, int N0) {
  if (N0 < 1) throw ValidationError("apply_operator: start index must be >= 1");
  const int d = A.degree();
  if (static_cast<int>(J.size()) < N0 + d)
    throw ValidationError("apply_operator: sequence too short (need J_" + std::to_string(N0 + d) + ")");
  LaurentPoly<Rational> r(Var::q);
  for (int j = 0; j <= d; ++j) {
    const auto& a = A.coeffs[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    r += evaluate_at_index(a, N0) * J[static_cast<std::size_t>(N0 + j - 1)];
  }
  return r;
}

BiPoly specialize_q1(const QDiffOperator& A) {
  BiPoly r('l', 'm');
  for (std::size_t j = 0; j < A.coeffs.size(); ++j)
    for (const auto& [key, c] : A.coeffs[j].terms())
      r += BiPoly::monomial(c, static_cast<int>(j), 2 * key.second, 'l', 'm');
  return r.unit_normalized();
}

HbarTable hbar_expand(const QDiffOperator& A, int p_max) {
  if (p_max < 0) throw ValidationError("hbar_expand: p_max must be >= 0");
  HbarTable t(A.coeffs.size(), std::vector<LaurentPoly<Rational>>(static_cast<std::size_t>(p_max) + 1));
  for (std::size_t j = 0; j < A.coeffs.size(); ++j) {
    for (const auto& [key, c] : A.coeffs[j].terms()) {
      Rational term(c);  // c (2 alpha)^p / p!
      for (int p = 0; p <= p_max; ++p) {
        if (p > 0) term = term * Rational(2 * key.first) / Rational(p);
        t[j][static_cast<std::size_t>(p)] += LaurentPoly<Rational>::monomial(term, 2 * key.second, Var::m);
      }
    }
  }
  return t;
}

namespace {

BiPoly Q(int c, int a, int b) { return q_monomial(Integer(c), a, b); }

BiPoly product(std::initializer_list<BiPoly> fs) {
  BiPoly r = Q(1, 0, 0);
  for (const auto& f : fs) r = r * f;
  return r;
}

}  // namespace

QDiffOperator raw_operator_41() {
  QDiffOperator A;
  A.knot = "4_1";
  const BiPoly f1 = Q(1, 1, 0) - Q(1, 3, 1);  // q - q^3 Q
  const BiPoly g1 = Q(1, 1, 0) - Q(1, 6, 2);  // q - q^6 Q^2
  const BiPoly g3 = Q(1, 3, 0) - Q(1, 6, 2);
  const BiPoly g5 = Q(1, 5, 0) - Q(1, 6, 2);
  A.coeffs.push_back(product({Q(1, 5, 1), f1, Q(1, 3, 0) - Q(1, 3, 1), Q(1, 1, 0) + Q(1, 3, 1), g1, g3}));
  const BiPoly long1 = Q(1, 8, 0) - Q(2, 9, 1) + Q(1, 10, 1) - Q(1, 9, 2) + Q(1, 10, 2) - Q(1, 11, 2) +
                       Q(1, 10, 3) - Q(2, 11, 3) + Q(1, 12, 4);
  A.coeffs.push_back(
      product({Q(-1, -5, -1), f1, Q(1, 2, 0) - Q(1, 3, 1), Q(1, 2, 0) + Q(1, 3, 1), g1, g3, long1}));
  const BiPoly long2 = Q(1, 4, 0) + Q(1, 5, 1) - Q(2, 6, 1) - Q(1, 7, 2) + Q(1, 8, 2) - Q(1, 9, 2) -
                       Q(2, 10, 3) + Q(1, 11, 3) + Q(1, 12, 4);
  A.coeffs.push_back(product({Q(1, -4, -1), f1, f1, Q(1, 1, 0) + Q(1, 3, 1), g3, g5, long2}));
  A.coeffs.push_back(product({Q(1, 4, 1), f1, Q(-1, 0, 0) + Q(1, 3, 1), Q(1, 2, 0) + Q(1, 3, 1), g3, g5}));
  return A;
}

QDiffOperator builtin_operator_41() { return normalize_operator(raw_operator_41()); }

QDiffOperator unknot_operator() {
  QDiffOperator A;
  A.knot = "unknot";
  A.coeffs = {Q(-1, 0, 0), Q(1, 0, 0)};
  return A;
}

}  // namespace qjones
