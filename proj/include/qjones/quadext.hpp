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

#include <memory>
#include <utility>

#include "qjones/ratfunc.hpp"

namespace qjones {

/// The generator s of K(m)(s), s^2 = R(m).  Shared by every element of one
/// extension; elements built over different radicands never mix.
template <ExactField T>
class Radicand {
 public:
  explicit Radicand(LaurentPoly<T> r) : r_(std::move(r)) {
    if (r_.is_zero()) throw ValidationError("radicand must be nonzero");
    const LaurentPoly<T> p = r_.stripped();
    if (poly::degree(p) > 0 && poly::degree(poly::gcd(p, derivative(p))) > 0)
      throw ValidationError("radicand is not squarefree");
    log_derivative_half_ = RationalFunction<T>(derive_u(r_), r_) * T(Rational(1, 2));
  }

  const LaurentPoly<T>& value() const noexcept { return r_; }
  /// (m R'(m)) / (2 R(m)); s' = this * s.
  const RationalFunction<T>& half_log_derivative() const noexcept { return log_derivative_half_; }

  friend bool operator==(const Radicand& a, const Radicand& b) { return a.r_ == b.r_; }

 private:
  LaurentPoly<T> r_;
  RationalFunction<T> log_derivative_half_;
};

template <ExactField T>
using RadicandPtr = std::shared_ptr<const Radicand<T>>;

template <ExactField T>
RadicandPtr<T> make_radicand(LaurentPoly<T> r) {
  return std::make_shared<const Radicand<T>>(std::move(r));
}

/// a + b*s with a, b in K(m) and s^2 = R.
template <ExactField T>
class QuadExt {
 public:
  using scalar_type = T;
  using rf_type = RationalFunction<T>;

  QuadExt() = default;
  explicit QuadExt(RadicandPtr<T> ctx, rf_type a = rf_type(), rf_type b = rf_type())
      : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt generator(RadicandPtr<T> ctx) { return QuadExt(std::move(ctx), rf_type(), rf_type(T(1))); }

  const rf_type& a() const noexcept { return a_; }
  const rf_type& b() const noexcept { return b_; }
  const RadicandPtr<T>& radicand() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  /// a^2 - b^2 R, the product with the conjugate.
  rf_type norm() const { return a_ * a_ - b_ * b_ * rf_type(ctx_->value()); }
  QuadExt conjugate() const { return QuadExt(ctx_, a_, -b_); }

  QuadExt inverse() const {
    const rf_type n = norm();
    if (n.is_zero()) throw DivisionByZero("QuadExt: element of norm zero");
    const rf_type ni = n.inverse();
    return QuadExt(ctx_, a_ * ni, -(b_ * ni));
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(join(x, y), x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(join(x, y), x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(x.ctx_, -x.a_, -x.b_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    auto ctx = join(x, y);
    if (x.is_rational() && y.is_rational()) return QuadExt(ctx, x.a_ * y.a_);
    if (x.is_rational()) return QuadExt(ctx, x.a_ * y.a_, x.a_ * y.b_);
    if (y.is_rational()) return QuadExt(ctx, x.a_ * y.a_, x.b_ * y.a_);
    rf_type bb = x.b_ * y.b_;
    if (!bb.is_zero()) bb *= rf_type(ctx->value());
    return QuadExt(ctx, x.a_ * y.a_ + bb, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    join(x, y);
    if (y.is_rational()) {
      if (y.a_.is_zero()) throw DivisionByZero("QuadExt: division by zero");
      const rf_type yi = y.a_.inverse();
      return QuadExt(x.ctx_ ? x.ctx_ : y.ctx_, x.a_ * yi, x.b_ * yi);
    }
    return x * y.inverse();
  }
  friend QuadExt operator*(const QuadExt& x, const T& c) { return QuadExt(x.ctx_, x.a_ * c, x.b_ * c); }
  friend QuadExt operator*(const T& c, const QuadExt& x) { return x * c; }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    join(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  // Elements without a context (default-constructed zero) adopt the other's.
  static RadicandPtr<T> join(const QuadExt& x, const QuadExt& y) {
    if (!x.ctx_) return y.ctx_;
    if (!y.ctx_ || x.ctx_ == y.ctx_ || *x.ctx_ == *y.ctx_) return x.ctx_;
    throw ComputationError("QuadExt: mismatched radicands");
  }

  RadicandPtr<T> ctx_;
  rf_type a_;
  rf_type b_;
};

/// d/du with s' = (m R' / 2R) s.
template <ExactField T>
QuadExt<T> derive_u(const QuadExt<T>& x) {
  if (x.is_rational()) return QuadExt<T>(x.radicand(), derive_u(x.a()));
  return QuadExt<T>(x.radicand(), derive_u(x.a()), derive_u(x.b()) + x.b() * x.radicand()->half_log_derivative());
}

template <ExactField To, ExactField From>
QuadExt<To> lift(const QuadExt<From>& x, RadicandPtr<To> ctx) {
  return QuadExt<To>(std::move(ctx), lift<To>(x.a()), lift<To>(x.b()));
}

}  // namespace qjones
