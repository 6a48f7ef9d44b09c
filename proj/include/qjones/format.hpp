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

// Canonical text forms.  Polynomials print with ascending exponents, e.g.
// "-2*m^-2 + 2*m^2"; rational functions are scaled to integer coefficients
// with no common content, "(-2 + 2*m^4)/(1 - 3*m^2 + m^4)".

#include <sstream>
#include <string>
#include <vector>

#include "qjones/quadext.hpp"

namespace qjones {

namespace detail {

// Append one term c*x^e; `first` controls the leading separator.
template <ExactField T>
void append_term(std::string& out, const T& c, int e, char var, bool first) {
  std::string mag;
  bool negative = false;
  if (is_simple(c)) {
    std::string s = to_string(c);
    if (!s.empty() && s[0] == '-') {
      negative = true;
      s.erase(0, 1);
    }
    mag = std::move(s);
  } else {
    mag = "(" + to_string(c) + ")";
  }
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (e == 0) {
    out += mag;
    return;
  }
  if (mag != "1") out += mag + "*";
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace detail

template <ExactField T>
std::string to_string(const LaurentPoly<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  p.for_each_term([&](int e, const T& c) {
    detail::append_term(out, c, e, static_cast<char>(p.var()), first);
    first = false;
  });
  return out;
}

/// Scale a set of polynomials by one positive rational so that all
/// coefficients become (Gaussian) integers with no common content.
template <ExactField T>
std::vector<LaurentPoly<T>> integer_scaled(std::vector<LaurentPoly<T>> ps) {
  Integer l = 1;
  for (const auto& p : ps) p.for_each_term([&](int, const T& c) { l = bmp::lcm(l, lcm_denominators(c)); });
  Integer g = 0;
  for (auto& p : ps) {
    p *= T(Rational(l));
    p.for_each_term([&](int, const T& c) { g = bmp::gcd(g, gcd_numerators(c)); });
  }
  if (g > 1)
    for (auto& p : ps) p /= T(Rational(g));
  return ps;
}

template <ExactField T>
std::string to_string(const RationalFunction<T>& f) {
  if (f.is_zero()) return "0";
  auto parts = integer_scaled<T>({f.num(), f.den()});
  if (parts[1].is_constant() && parts[1].coeff(0) == T(1)) return "(" + to_string(parts[0]) + ")";
  return "(" + to_string(parts[0]) + ")/(" + to_string(parts[1]) + ")";
}

template <ExactField T>
std::string to_string(const QuadExt<T>& x) {
  std::string r = x.radicand() ? to_string(x.radicand()->value()) : "?";
  std::string v;
  if (x.b().is_zero())
    v = to_string(x.a());
  else if (x.a().is_zero())
    v = "(" + to_string(x.b()) + ")*s";
  else
    v = to_string(x.a()) + " + (" + to_string(x.b()) + ")*s";
  return v + ", s^2 = " + r;
}

}  // namespace qjones
