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
#include <vector>

#include "qjones/lpoly.hpp"
#include "qjones/mp.hpp"

namespace qjones {

/// Truncated power series sum_k c_k eps^k, valid to order size()-1.
///
/// Used as the numeric field near a sample point u0: eps = u - u0.
/// Products and quotients keep the shorter of the operand lengths, and
/// derive_u drops one order.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Complex> c) : c_(std::move(c)) {}
  Series(const Complex& v, std::size_t len) : c_(len, Complex(0)) {
    if (len > 0) c_[0] = v;
  }

  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<Complex>& coefficients() const noexcept { return c_; }
  const Complex& operator[](std::size_t k) const { return c_[k]; }
  Complex value() const { return c_.empty() ? Complex(0) : c_[0]; }

  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Complex> r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = a.c_[k] + b.c_[k];
    return Series(std::move(r));
  }
  friend Series operator-(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Complex> r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = a.c_[k] - b.c_[k];
    return Series(std::move(r));
  }
  friend Series operator-(Series a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Complex> r(n, Complex(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Series(std::move(r));
  }
  friend Series operator*(Series a, const Complex& c) {
    for (auto& x : a.c_) x *= c;
    return a;
  }
  friend Series operator*(Series a, const Rational& c) { return a * to_complex(c); }

  Series inverse() const {
    if (c_.empty() || c_[0] == Complex(0)) throw DivisionByZero("Series: zero constant term");
    const std::size_t n = size();
    std::vector<Complex> r(n, Complex(0));
    const Complex inv0 = Complex(1) / c_[0];
    r[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      Complex acc(0);
      for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r[k - i];
      r[k] = -acc * inv0;
    }
    return Series(std::move(r));
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series& operator/=(const Series& o) { return *this = *this / o; }

 private:
  std::vector<Complex> c_;
};

/// d/d eps.
inline Series derive_u(const Series& s) {
  if (s.size() <= 1) return Series();
  std::vector<Complex> r(s.size() - 1);
  for (std::size_t k = 1; k < s.size(); ++k) r[k - 1] = s[k] * Complex(Real(static_cast<unsigned>(k)));
  return Series(std::move(r));
}

/// exp(e * eps) truncated to len terms.
inline Series exp_series(const Complex& e, std::size_t len) {
  std::vector<Complex> r(len);
  Complex t(1);
  for (std::size_t k = 0; k < len; ++k) {
    r[k] = t;
    t = t * e / Complex(Real(static_cast<unsigned>(k + 1)));
  }
  return Series(std::move(r));
}

/// p(m0 e^eps) as a series of length len.
template <ExactField T>
Series embed_at(const LaurentPoly<T>& p, const Complex& m0, std::size_t len) {
  Series r(Complex(0), len);
  p.for_each_term([&](int e, const T& c) {
    const Complex coef = to_complex(c) * ipow(m0, e);
    r += exp_series(Complex(Real(e)), len) * coef;
  });
  return r;
}

}  // namespace qjones
