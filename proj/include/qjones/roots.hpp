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

#include <vector>

#include "qjones/mp.hpp"

namespace qjones {

struct RootReport {
  std::vector<Complex> roots;
  Real max_residual{0};  // max |p(z)| / sum |c_k| |z|^k over the roots
  bool converged = false;
};

/// All complex roots of sum_k c[k] z^k (ascending coefficients, c.back() != 0)
/// by simultaneous Aberth-Ehrlich iteration at the current working precision.
RootReport polynomial_roots(const std::vector<Complex>& c, int max_iterations = 2000);

/// Horner value and derivative.
void horner(const std::vector<Complex>& c, const Complex& z, Complex& value, Complex& deriv);

}  // namespace qjones
