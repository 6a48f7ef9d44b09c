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

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qjones/scalar.hpp"

namespace qjones {

/// Variable tag. m = e^u, q = e^{2 hbar}, t = Alexander variable.
enum class Var : char { m = 'm', q = 'q', t = 't' };

/// Dense Laurent polynomial sum_e c_e x^e over a coefficient ring T.
///
/// Storage is a contiguous coefficient vector starting at exponent low().
/// Both ends of the vector are nonzero; the zero polynomial has no storage.
template <class T>
class LaurentPoly {
 public:
  using scalar_type = T;

  LaurentPoly() = default;
  explicit LaurentPoly(Var v) : var_(v) {}
  LaurentPoly(const T& c, Var v = Var::m) : var_(v) {  // NOLINT: constants lift implicitly
    if (c != T(0)) coeffs_.push_back(c);
  }
  LaurentPoly(int c, Var v = Var::m) : LaurentPoly(T(c), v) {}  // NOLINT

  static LaurentPoly monomial(const T& c, int exponent, Var v = Var::m) {
    LaurentPoly p(c, v);
    p.low_ = exponent;
    return p;
  }

  /// Coefficients c[k] of x^{low + k}; zeros at either end are trimmed.
  static LaurentPoly from_coefficients(int low, std::vector<T> c, Var v = Var::m) {
    LaurentPoly p(v);
    p.low_ = low;
    p.coeffs_ = std::move(c);
    p.trim();
    return p;
  }

  /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<int, T>>& terms, Var v = Var::m) {
    LaurentPoly p(v);
    for (const auto& [e, c] : terms) p += monomial(c, e, v);
    return p;
  }

  Var var() const noexcept { return var_; }
  LaurentPoly with_var(Var v) const {
    LaurentPoly p = *this;
    p.var_ = v;
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest exponent; 0 for the zero polynomial.
  int low() const noexcept { return coeffs_.empty() ? 0 : low_; }
  /// Highest exponent; -1 below low() for the zero polynomial.
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  T coeff(int e) const {
    if (coeffs_.empty() || e < low_ || e > high()) return T(0);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  const T& leading() const { return coeffs_.back(); }
  const T& trailing() const { return coeffs_.front(); }

  bool is_constant() const noexcept {
    return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0);
  }
  /// True when the polynomial has no negative exponents.
  bool is_polynomial() const noexcept { return coeffs_.empty() || low_ >= 0; }

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != T(0)) f(low_ + static_cast<int>(k), coeffs_[k]);
  }

  /// Multiply by x^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.coeffs_.empty()) p.low_ += k;
    return p;
  }
  /// Divide out the lowest power: result has nonzero constant term.
  LaurentPoly stripped() const { return shifted(-low()); }

  LaurentPoly& operator+=(const LaurentPoly& o) { return axpy(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return axpy(o, -1); }

  LaurentPoly& operator*=(const T& c) {
    if (c == T(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  LaurentPoly& operator/=(const T& c) {
    if (c == T(0)) throw DivisionByZero();
    for (auto& x : coeffs_) x /= c;
    return *this;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_var(b);
    LaurentPoly r(a.coeffs_.empty() ? b.var_ : a.var_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend LaurentPoly operator*(LaurentPoly a, const T& c) { return a *= c; }
  friend LaurentPoly operator*(const T& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator/(LaurentPoly a, const T& c) { return a /= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return a.coeffs_.empty() && b.coeffs_.empty();
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void check_var(const LaurentPoly& o) const {
    if (!coeffs_.empty() && !o.coeffs_.empty() && var_ != o.var_)
      throw std::invalid_argument("LaurentPoly: mixing variables");
  }

  LaurentPoly& axpy(const LaurentPoly& o, int sign) {
    check_var(o);
    if (o.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
      var_ = o.var_;
      low_ = o.low_;
      coeffs_ = o.coeffs_;
      if (sign < 0)
        for (auto& x : coeffs_) x = -x;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), T(0));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), T(0));
    const std::size_t off = static_cast<std::size_t>(o.low_ - lo);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      if (sign > 0)
        coeffs_[off + k] += o.coeffs_[k];
      else
        coeffs_[off + k] -= o.coeffs_[k];
    }
    trim();
    return *this;
  }

  void trim() {
    std::size_t end = coeffs_.size();
    while (end > 0 && coeffs_[end - 1] == T(0)) --end;
    coeffs_.resize(end);
    std::size_t begin = 0;
    while (begin < coeffs_.size() && coeffs_[begin] == T(0)) ++begin;
    if (begin > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(begin));
      low_ += static_cast<int>(begin);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  Var var_ = Var::m;
  int low_ = 0;
  std::vector<T> coeffs_;
};

/// x d/dx, i.e. d/du when x = e^u.
template <class T>
LaurentPoly<T> derive_u(const LaurentPoly<T>& p) {
  std::vector<T> c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= T(p.low() + static_cast<int>(k));
  return LaurentPoly<T>::from_coefficients(p.low(), std::move(c), p.var());
}

/// Ordinary derivative d/dx.
template <class T>
LaurentPoly<T> derivative(const LaurentPoly<T>& p) {
  return derive_u(p).shifted(-1);
}

/// x -> x^k.
template <class T>
LaurentPoly<T> substitute_power(const LaurentPoly<T>& p, int k, Var v) {
  LaurentPoly<T> r(v);
  p.for_each_term([&](int e, const T& c) { r += LaurentPoly<T>::monomial(c, e * k, v); });
  return r;
}

/// Evaluate at x (any type V constructible from the coefficients).
template <class V, class T, class Lift>
V evaluate(const LaurentPoly<T>& p, const V& x, Lift&& lift) {
  if (p.is_zero()) return V(0);
  const auto& c = p.coefficients();
  V acc = lift(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * x + lift(c[k]);
  const int lo = p.low();
  if (lo == 0) return acc;
  V base = lo > 0 ? x : V(1) / x;
  V scale(1);
  for (int n = lo > 0 ? lo : -lo; n > 0; n >>= 1) {
    if (n & 1) scale *= base;
    base *= base;
  }
  return acc * scale;
}

template <class T>
LaurentPoly<T> pow(const LaurentPoly<T>& p, unsigned n) {
  LaurentPoly<T> r(T(1), p.var());
  LaurentPoly<T> b = p;
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    if (n > 1) b *= b;
  }
  return r;
}

}  // namespace qjones
