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

#include "qjones/integrate.hpp"

#include <algorithm>
#include <map>

#include "qjones/format.hpp"
#include "qjones/roots.hpp"

namespace qjones {

namespace {

using P = LaurentPoly<Rational>;
using RF = RationalFunction<Rational>;

P monomial(const Rational& c, int e) { return P::monomial(c, e, Var::m); }

// Integral in m of a Laurent polynomial; the m^-1 coefficient is returned
// separately as the coefficient of log m.
P integrate_laurent(const P& p, Rational& log_coeff) {
  P r(Var::m);
  p.for_each_term([&](int e, const Rational& c) {
    if (e == -1)
      log_coeff += c;
    else
      r += monomial(c / Rational(e + 1), e + 1);
  });
  return r;
}

// Group numerical residues exactly; returns false when they are not rational
// or when the grouped factors do not account for the whole denominator.
bool log_part(const P& w, const P& q, std::vector<LogTerm>& out) {
  if (w.is_zero()) return true;
  const P dq = derivative(q);
  PrecisionGuard guard(320);
  std::vector<Complex> cq;
  for (int e = 0; e <= q.high(); ++e) cq.push_back(to_complex(q.coeff(e)));
  const RootReport rep = polynomial_roots(cq);
  std::vector<Rational> candidates;
  // Denominators of rational residues divide the discriminant-ish scale; a
  // generous bound is harmless because every candidate is verified exactly.
  const Integer max_den("1000000000000");
  const Real tol = pow(Real(10), -40);
  for (const auto& a : rep.roots) {
    const Complex res = evaluate(w, a, [](const Rational& c) { return to_complex(c); }) /
                        evaluate(dq, a, [](const Rational& c) { return to_complex(c); });
    if (abs(res.imag()) > tol * (1 + abs(res))) return false;
    const Rational c = rationalize(res.real(), max_den);
    if (abs(to_real(c) - res.real()) > tol * (1 + abs(res))) return false;
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
  }
  int total = 0;
  for (const auto& c : candidates) {
    if (c == 0) continue;
    P g = poly::gcd(q, w - dq * c);
    total += poly::degree(g);
    if (poly::degree(g) > 0) out.push_back({c, primitive_part(g)});
  }
  return total == poly::degree(q);
}

}  // namespace

P primitive_part(const P& p) {
  auto v = integer_scaled<Rational>({p});
  P r = v[0];
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

HermiteResult hermite_reduce(const P& a0, const P& d) {
  RF g;
  P a = a0;
  P dminus = poly::gcd(d, derivative(d));
  const P dstar = poly::exact_div(d, dminus);
  while (poly::degree(dminus) > 0) {
    const P d2 = poly::gcd(dminus, derivative(dminus));
    const P dminus_star = poly::exact_div(dminus, d2);
    const P lhs = -poly::exact_div(dstar * derivative(dminus), dminus);
    auto [b, c] = poly::solve_bezout(lhs, dminus_star, a);
    a = c - poly::exact_div(derivative(b) * dstar, dminus_star);
    g += RF(b, dminus);
    dminus = d2;
  }
  return {g, a, dstar};
}

LogCombination integrate_du(const RF& D) {
  LogCombination F;
  if (D.is_zero()) return F;
  // Integrate D(m)/m dm.  Write D/m = L(m) + V/den with L Laurent, deg V < deg den.
  const P& den = D.den();
  const int e = D.num().low() - 1;
  const P n0 = D.num().stripped();
  P laurent(Var::m), v(Var::m);
  if (den.is_constant()) {
    laurent = D.num().shifted(-1) / den.coeff(0);
  } else if (e >= 0) {
    auto [quo, rem] = poly::divmod(n0.shifted(e), den);
    laurent = quo;
    v = rem;
  } else {
    // n0 = A*den + B*m^k with deg A < k: D/m = A/m^k + B/den.
    const int k = -e;
    auto [A, B] = poly::solve_bezout(den, monomial(1, k), n0);
    laurent = A.shifted(-k);
    auto [quo, rem] = poly::divmod(B, den);
    laurent += quo;
    v = rem;
  }
  F.rational = RF(integrate_laurent(laurent, F.u_coeff));
  if (!v.is_zero()) {
    HermiteResult h = hermite_reduce(v, den);
    F.rational += h.g;
    if (!log_part(h.w, h.dstar, F.logs)) throw NonElementaryLog();
  }
  std::sort(F.logs.begin(), F.logs.end(), [](const LogTerm& a, const LogTerm& b) {
    if (a.argument.high() != b.argument.high()) return a.argument.high() < b.argument.high();
    return to_string(a.argument) < to_string(b.argument);
  });
  // Exact certificate; a failure here means the numerical grouping was wrong.
  if (derive_u(F) != D) throw NonElementaryLog();
  return F;
}

RF derive_u(const LogCombination& F) {
  RF r = derive_u(F.rational) + RF(F.u_coeff);
  for (const auto& t : F.logs) r += RF(derive_u(t.argument), t.argument) * t.coeff;
  return r;
}

std::string to_string(const LogCombination& F) {
  std::string out;
  const auto add = [&](const std::string& s) {
    if (out.empty())
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  };
  const auto scaled = [](const Rational& c, const std::string& what) {
    if (c == 1) return what;
    if (c == -1) return "-" + what;
    return c.str() + "*" + what;
  };
  if (!F.rational.is_zero()) add(to_string(F.rational));
  for (const auto& t : F.logs) add(scaled(t.coeff, "log(" + to_string(t.argument) + ")"));
  if (F.u_coeff != 0) add(scaled(F.u_coeff, "u"));
  return out.empty() ? "0" : out;
}

}  // namespace qjones
