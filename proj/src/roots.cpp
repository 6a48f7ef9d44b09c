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

#include "qjones/roots.hpp"

#include <algorithm>

#include "qjones/error.hpp"

namespace qjones {

void horner(const std::vector<Complex>& c, const Complex& z, Complex& value, Complex& deriv) {
  value = Complex(0);
  deriv = Complex(0);
  for (std::size_t k = c.size(); k-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + c[k];
  }
}

RootReport polynomial_roots(const std::vector<Complex>& coeffs, int max_iterations) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.empty()) throw ValidationError("polynomial_roots: zero polynomial");
  RootReport rep;
  const std::size_t n = c.size() - 1;
  if (n == 0) {
    rep.converged = true;
    return rep;
  }
  // Zero roots are peeled off exactly.
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == Complex(0)) ++zeros;
  std::vector<Complex> p(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const std::size_t deg = p.size() - 1;

  // Initial guesses on a circle whose radius is a geometric mean estimate.
  const Real r0 = pow(abs(p[0] / p[deg]), Real(1) / Real(static_cast<unsigned>(std::max<std::size_t>(deg, 1))));
  std::vector<Complex> z(deg);
  const Real two_pi = 2 * pi_real();
  for (std::size_t k = 0; k < deg; ++k) {
    const Real ang = two_pi * Real(static_cast<unsigned>(k)) / Real(static_cast<unsigned>(deg)) + Real("0.4");
    z[k] = Complex(r0 * cos(ang), r0 * sin(ang));
  }
  const Real eps = pow(Real(2), -static_cast<int>(Real::default_precision() * 3.32));
  std::vector<char> done(deg, 0);
  bool all = deg == 0;
  for (int it = 0; it < max_iterations && !all; ++it) {
    all = true;
    for (std::size_t k = 0; k < deg; ++k) {
      if (done[k]) continue;
      Complex v, d;
      horner(p, z[k], v, d);
      if (v == Complex(0)) {
        done[k] = 1;
        continue;
      }
      const Complex w = v / d;
      Complex s(0);
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      const Complex step = w / (Complex(1) - w * s);
      z[k] -= step;
      if (abs(step) <= eps * (1 + abs(z[k])))
        done[k] = 1;
      else
        all = false;
    }
  }
  rep.converged = all;
  for (std::size_t k = 0; k < zeros; ++k) z.push_back(Complex(0));
  for (const auto& zk : z) {
    Complex v, d;
    horner(c, zk, v, d);
    Real scale(0), az = abs(zk), pw(1);
    for (const auto& ck : c) {
      scale += abs(ck) * pw;
      pw *= az;
    }
    rep.max_residual = std::max(rep.max_residual, Real(abs(v) / scale));
  }
  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  rep.roots = std::move(z);
  return rep;
}

}  // namespace qjones
