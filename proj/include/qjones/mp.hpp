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

// Arbitrary-precision real and complex numbers (MPFR through
// Boost.Multiprecision).  Working precision is process-global and set with
// PrecisionGuard (Complex shares the Real setting); values created under a
// guard keep their precision.

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

#include "qjones/scalar.hpp"

namespace qjones {

using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;
using Complex = bmp::number<bmp::complex_adaptor<bmp::mpfr_float_backend<0>>, bmp::et_off>;

inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Scoped working precision in bits.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionGuard() {
    Real::default_precision(saved_);
  }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& x) { return Real(bmp::numerator(x)) / Real(bmp::denominator(x)); }
inline Complex to_complex(const Rational& x) { return Complex(to_real(x)); }
inline Complex to_complex(const GaussianRational& x) { return Complex(to_real(x.re), to_real(x.im)); }

inline Real pi_real() { return boost::math::constants::pi<Real>(); }
inline Complex imaginary_unit() { return Complex(Real(0), Real(1)); }

/// z^n by repeated squaring (n may be negative).
inline Complex ipow(Complex z, int n) {
  if (n < 0) return Complex(1) / ipow(z, -n);
  Complex r(1);
  for (unsigned k = static_cast<unsigned>(n); k > 0; k >>= 1) {
    if (k & 1) r *= z;
    if (k > 1) z *= z;
  }
  return r;
}

/// Decimal rendering with `digits` significant digits.
inline std::string to_decimal(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

/// Parse "a", "a+bi", "a-bi", "bi", "i", "pi*i" style complex literals.
Complex parse_complex(const std::string& text);

Integer floor_to_integer(const Real& x);

/// Closest rational with denominator at most max_den (continued fractions).
Rational rationalize(const Real& x, const Integer& max_den);

}  // namespace qjones
