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

#include <utility>

#include "qjones/lpoly.hpp"
#include "qjones/poly_algorithms.hpp"

namespace qjones {

/// Quotient of two Laurent polynomials in m over an exact field.
///
/// Canonical form: the denominator is an ordinary monic polynomial with a
/// nonzero constant term (all powers of m live in the numerator), and
/// numerator and denominator are coprime.  Two equal functions therefore
/// have identical representations.
template <ExactField T>
class RationalFunction {
 public:
  using scalar_type = T;
  using poly_type = LaurentPoly<T>;

  RationalFunction() : den_(T(1)) {}
  RationalFunction(const T& c) : num_(c), den_(T(1)) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(T(c)) {}  // NOLINT
  RationalFunction(poly_type p) : num_(std::move(p)), den_(T(1), num_.var()) {}  // NOLINT
  RationalFunction(const poly_type& num, const poly_type& den) { assign(num, den); }

  const poly_type& num() const noexcept { return num_; }
  const poly_type& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const noexcept { return den_.is_constant(); }

  RationalFunction inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    RationalFunction r;
    const int k = num_.low();
    poly_type d = num_.stripped();
    T lc = d.leading();
    r.num_ = den_.shifted(-k) / lc;
    r.den_ = d / lc;
    return r;
  }

  RationalFunction& operator*=(const T& c) {
    num_ *= c;
    return *this;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_laurent() && b.is_laurent()) return RationalFunction(a.num_ + b.num_);
    const poly_type g = poly::gcd(a.den_, b.den_);
    RationalFunction r;
    if (g.is_constant()) {
      r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      r.den_ = a.den_ * b.den_;
      return r;
    }
    const poly_type a1 = poly::exact_div(a.den_, g);
    const poly_type b1 = poly::exact_div(b.den_, g);
    poly_type t = a.num_ * b1 + b.num_ * a1;
    if (t.is_zero()) return r;
    const poly_type g2 = poly::gcd(t.stripped(), g);
    if (g2.is_constant()) {
      r.num_ = std::move(t);
      r.den_ = a1 * b1 * g;
    } else {
      r.num_ = poly::exact_div(t.stripped(), g2).shifted(t.low());
      r.den_ = a1 * b1 * poly::exact_div(g, g2);
    }
    return r;
  }

  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.is_laurent() && b.is_laurent()) return RationalFunction(a.num_ * b.num_);
    const poly_type an = a.num_.stripped();
    const poly_type bn = b.num_.stripped();
    const poly_type g1 = poly::gcd(an, b.den_);
    const poly_type g2 = poly::gcd(bn, a.den_);
    RationalFunction r;
    r.num_ = (div_if(an, g1) * div_if(bn, g2)).shifted(a.num_.low() + b.num_.low());
    r.den_ = div_if(a.den_, g2) * div_if(b.den_, g1);
    return r;
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  friend RationalFunction operator*(RationalFunction a, const T& c) { return a *= c; }
  friend RationalFunction operator*(const T& c, RationalFunction a) { return a *= c; }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Re-run canonicalization on an already canonical value (identity).
  RationalFunction normalized() const { return RationalFunction(num_, den_); }

 private:
  static poly_type div_if(const poly_type& a, const poly_type& g) {
    return g.is_constant() ? a : poly::exact_div(a, g);
  }

  void assign(const poly_type& num, const poly_type& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const Var v = den.var();
    if (num.is_zero()) {
      num_ = poly_type(v);
      den_ = poly_type(T(1), v);
      return;
    }
    const int shift = den.low();
    poly_type d = den.stripped();
    poly_type n0 = num.stripped();
    const int k = num.low() - shift;
    if (!d.is_constant()) {
      const poly_type g = poly::gcd(n0, d);
      if (!g.is_constant()) {
        n0 = poly::exact_div(n0, g);
        d = poly::exact_div(d, g);
      }
    }
    const T lc = d.leading();
    num_ = (n0 / lc).shifted(k);
    den_ = (d / lc);
  }

  poly_type num_;
  poly_type den_;
};

/// m d/dm applied exactly (quotient rule, then re-reduced).
template <ExactField T>
RationalFunction<T> derive_u(const RationalFunction<T>& f) {
  using P = LaurentPoly<T>;
  const P& n = f.num();
  const P& d = f.den();
  if (d.is_constant()) return RationalFunction<T>(derive_u(n));
  const P dd = derive_u(d);
  // d and m*d' share gcd(d, d'); dividing it out keeps the final gcd small.
  const P h = poly::gcd(d, derivative(d));
  const P d1 = h.is_constant() ? d : poly::exact_div(d, h);
  const P e1 = h.is_constant() ? dd : poly::exact_div(dd, h);
  return RationalFunction<T>(derive_u(n) * d1 - n * e1, d * d1);
}

template <ExactField T>
RationalFunction<T> pow(const RationalFunction<T>& f, int n) {
  if (n < 0) return pow(f.inverse(), -n);
  RationalFunction<T> r(T(1)), b = f;
  for (unsigned k = static_cast<unsigned>(n); k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

/// Coefficient-wise image under a field embedding (e.g. Q -> Q(i)).
template <ExactField To, ExactField From>
LaurentPoly<To> lift(const LaurentPoly<From>& p) {
  LaurentPoly<To> r(p.var());
  p.for_each_term([&](int e, const From& c) { r += LaurentPoly<To>::monomial(To(c), e, p.var()); });
  return r;
}

template <ExactField To, ExactField From>
RationalFunction<To> lift(const RationalFunction<From>& f) {
  return RationalFunction<To>(lift<To>(f.num()), lift<To>(f.den()));
}

template <class V, ExactField T, class Lift>
V evaluate(const RationalFunction<T>& f, const V& x, Lift&& lift_scalar) {
  return evaluate(f.num(), x, lift_scalar) / evaluate(f.den(), x, lift_scalar);
}

}  // namespace qjones
