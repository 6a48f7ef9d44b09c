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

#pragma once

// Euclidean-domain algorithms for ordinary polynomials (no negative
// exponents) over a field, stored as LaurentPoly.

#include <utility>
#include <vector>

#include "qjones/lpoly.hpp"

namespace qjones::poly {

template <class T>
int degree(const LaurentPoly<T>& p) {
  return p.is_zero() ? -1 : p.high();
}

namespace detail {

template <class T>
std::vector<T> dense(const LaurentPoly<T>& p) {
  if (!p.is_polynomial()) throw std::invalid_argument("poly: negative exponent");
  std::vector<T> d(p.is_zero() ? 0 : static_cast<std::size_t>(p.high() + 1), T(0));
  p.for_each_term([&](int e, const T& c) { d[static_cast<std::size_t>(e)] = c; });
  return d;
}

template <class T>
void trim(std::vector<T>& v) {
  while (!v.empty() && v.back() == T(0)) v.pop_back();
}

// In-place remainder a mod b; b must be monic and nonempty.  Returns quotient
// when want_quotient is set.
template <class T>
std::vector<T> reduce(std::vector<T>& a, const std::vector<T>& b, bool want_quotient) {
  std::vector<T> quo;
  const std::size_t nb = b.size();
  if (a.size() < nb) return quo;
  if (want_quotient) quo.assign(a.size() - nb + 1, T(0));
  const T& lead = b.back();
  const bool monic = lead == T(1);
  for (std::size_t k = a.size(); k-- >= nb;) {
    if (a[k] == T(0)) continue;
    T f = monic ? a[k] : a[k] / lead;
    const std::size_t shift = k - (nb - 1);
    for (std::size_t i = 0; i + 1 < nb; ++i)
      if (b[i] != T(0)) a[shift + i] -= f * b[i];
    a[k] = T(0);
    if (want_quotient) quo[shift] = std::move(f);
  }
  trim(a);
  return quo;
}

template <class T>
void make_monic(std::vector<T>& v) {
  if (v.empty() || v.back() == T(1)) return;
  T inv = T(1) / v.back();
  for (auto& x : v) x *= inv;
}

}  // namespace detail

template <class T>
LaurentPoly<T> monic(const LaurentPoly<T>& p) {
  if (p.is_zero() || p.leading() == T(1)) return p;
  return p / p.leading();
}

/// Quotient and remainder of polynomial division; b != 0.
template <class T>
std::pair<LaurentPoly<T>, LaurentPoly<T>> divmod(const LaurentPoly<T>& a, const LaurentPoly<T>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  auto ra = detail::dense(a);
  const auto rb = detail::dense(b);
  auto quo = detail::reduce(ra, rb, true);
  return {LaurentPoly<T>::from_coefficients(0, std::move(quo), a.var()),
          LaurentPoly<T>::from_coefficients(0, std::move(ra), a.var())};
}

/// a / b, throwing if b does not divide a.
template <class T>
LaurentPoly<T> exact_div(const LaurentPoly<T>& a, const LaurentPoly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ComputationError("poly::exact_div: nonzero remainder");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
LaurentPoly<T> gcd(const LaurentPoly<T>& a, const LaurentPoly<T>& b) {
  const Var v = a.is_zero() ? b.var() : a.var();
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly<T>(T(1), v);
  auto x = detail::dense(a);
  auto y = detail::dense(b);
  if (x.size() < y.size()) std::swap(x, y);
  detail::make_monic(y);
  while (!y.empty()) {
    if (y.size() == 1) return LaurentPoly<T>(T(1), v);
    detail::reduce(x, y, false);
    detail::make_monic(x);
    std::swap(x, y);
  }
  return LaurentPoly<T>::from_coefficients(0, std::move(x), v);
}

template <class T>
struct Bezout {
  LaurentPoly<T> g;  // monic gcd
  LaurentPoly<T> s;  // s*a + t*b = g
  LaurentPoly<T> t;
};

template <class T>
Bezout<T> xgcd(const LaurentPoly<T>& a, const LaurentPoly<T>& b) {
  using P = LaurentPoly<T>;
  const Var v = a.var();
  P r0 = a, r1 = b, s0(T(1), v), s1(v), t0(v), t1(T(1), v);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    P t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T lc = r0.leading();
  return {r0 / lc, s0 / lc, t0 / lc};
}

/// Solve s*a + t*b = c with deg s < deg b; requires gcd(a, b) | c.
template <class T>
std::pair<LaurentPoly<T>, LaurentPoly<T>> solve_bezout(const LaurentPoly<T>& a, const LaurentPoly<T>& b,
                                                       const LaurentPoly<T>& c) {
  auto [g, s, t] = xgcd(a, b);
  auto [q, r] = divmod(c, g);
  if (!r.is_zero()) throw ComputationError("solve_bezout: gcd does not divide right-hand side");
  LaurentPoly<T> ss = s * q;
  LaurentPoly<T> tt = t * q;
  if (!b.is_zero()) {
    auto [k, rem] = divmod(ss, b);
    ss = rem;
    tt += k * a;
  }
  return {ss, tt};
}

/// Yun's algorithm: p = lc * prod_i f_i^(i+1), f_i squarefree and pairwise coprime (monic).
template <class T>
std::vector<LaurentPoly<T>> squarefree_decomposition(const LaurentPoly<T>& p) {
  using P = LaurentPoly<T>;
  std::vector<P> out;
  if (degree(p) <= 0) return out;
  P dp = derivative(p);
  P a = gcd(p, dp);
  P b = exact_div(p, a);
  P c = exact_div(dp, a);
  P d = c - derivative(b);
  while (degree(b) > 0) {
    P f = gcd(b, d);
    out.push_back(monic(f));
    b = exact_div(b, f);
    c = exact_div(d, f);
    d = c - derivative(b);
  }
  while (!out.empty() && degree(out.back()) == 0) out.pop_back();
  return out;
}

template <class T>
LaurentPoly<T> squarefree_part(const LaurentPoly<T>& p) {
  if (degree(p) <= 0) return LaurentPoly<T>(T(1), p.var());
  return monic(exact_div(p, gcd(p, derivative(p))));
}

}  // namespace qjones::poly
