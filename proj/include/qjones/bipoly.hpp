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

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qjones/lpoly.hpp"

namespace qjones {

/// Sparse bivariate Laurent polynomial with integer coefficients.
///
/// Exponent pairs are (x-degree, y-degree).  Used for classical A-polynomials
/// in (l, m) and for operator coefficients in (q, Q).
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Integer>;

  BiPoly() = default;
  BiPoly(char x, char y) : x_(x), y_(y) {}
  BiPoly(const Integer& c, char x, char y) : x_(x), y_(y) {
    if (c != 0) terms_[{0, 0}] = c;
  }

  static BiPoly monomial(const Integer& c, int ex, int ey, char x, char y);
  /// The single-variable polynomial p placed in x (or y when in_y).
  static BiPoly from_laurent(const LaurentPoly<Rational>& p, bool in_y, char x, char y);

  char x_name() const noexcept { return x_; }
  char y_name() const noexcept { return y_; }
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(int ex, int ey) const;

  int min_x() const;
  int max_x() const;
  int min_y() const;
  int max_y() const;

  /// Coefficient of x^k as a Laurent polynomial in y.
  LaurentPoly<Rational> x_coefficient(int k, Var yv) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Integer& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Integer(-1); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Multiply by x^ax y^ay.
  BiPoly shifted(int ax, int ay) const;
  /// gcd of all coefficients (positive; 0 for the zero polynomial).
  Integer content() const;

  /// Unit normal form: the common monomial is divided out and the sign is
  /// fixed so that the term with the largest (x-degree, y-degree) is positive.
  BiPoly unit_normalized() const;

  /// Exact quotient a / b when b divides a over Z[x, y] (after removing the
  /// common monomials of both); std::nullopt otherwise.
  friend std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

 private:
  void add_term(const Key& k, const Integer& c);

  char x_ = 'l';
  char y_ = 'm';
  Map terms_;
};

BiPoly pow(const BiPoly& p, unsigned n);

/// Terms ordered by (y-degree, x-degree) ascending, e.g. "1 + l*m^6".
std::string to_string(const BiPoly& p);

/// Parse the to_string form back (integer coefficients, '*' and '^' explicit).
BiPoly parse_bipoly(const std::string& text, char x, char y);

}  // namespace qjones
