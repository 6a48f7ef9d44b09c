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

// Exact coefficient fields: Q (GMP rationals) and Q(i).

#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <ostream>
#include <string>

#include "qjones/error.hpp"

namespace qjones {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

/// Element x + y*i of Q(i) (or of T(i) for any field T).
template <class T>
struct Gaussian {
  T re{0};
  T im{0};

  Gaussian() = default;
  Gaussian(int v) : re(v) {}  // NOLINT: implicit lift of integer literals
  Gaussian(const T& r) : re(r) {}  // NOLINT
  Gaussian(const T& r, const T& i) : re(r), im(i) {}

  static Gaussian imaginary_unit() { return Gaussian(T(0), T(1)); }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    T n = o.re * o.re + o.im * o.im;
    if (n == 0) throw DivisionByZero();
    T r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re, -a.im); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

using GaussianRational = Gaussian<Rational>;

/// The exact coefficient fields used by polynomials and rational functions.
template <class T>
concept ExactField = std::same_as<T, Rational> || std::same_as<T, GaussianRational>;

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const GaussianRational& x) { return x.re == 0 && x.im == 0; }

inline Rational conj(const Rational& x) { return x; }
inline GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }

inline Integer lcm_denominators(const Rational& x) { return bmp::denominator(x); }
inline Integer lcm_denominators(const GaussianRational& x) {
  return bmp::lcm(bmp::denominator(x.re), bmp::denominator(x.im));
}

/// gcd of the numerators; 0 for x == 0.
inline Integer gcd_numerators(const Rational& x) { return bmp::abs(bmp::numerator(x)); }
inline Integer gcd_numerators(const GaussianRational& x) {
  return bmp::gcd(bmp::numerator(x.re), bmp::numerator(x.im));
}

/// Sign of the first nonzero component: +1, -1, or 0.
inline int leading_sign(const Rational& x) { return x.sign(); }
inline int leading_sign(const GaussianRational& x) {
  return x.re != 0 ? x.re.sign() : x.im.sign();
}

std::string to_string(const Rational& x);
std::string to_string(const GaussianRational& x);

/// True when the coefficient prints as a single signed token (no inner '+').
inline bool is_simple(const Rational&) { return true; }
inline bool is_simple(const GaussianRational& x) { return x.re == 0 || x.im == 0; }

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << to_string(x);
}

}  // namespace qjones
