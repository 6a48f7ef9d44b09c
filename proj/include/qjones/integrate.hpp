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

#include <string>
#include <vector>

#include "qjones/ratfunc.hpp"

namespace qjones {

struct LogTerm {
  Rational coeff;
  LaurentPoly<Rational> argument;  // primitive, squarefree, integer coefficients, positive lead
};

/// rational + sum_i c_i log(g_i(m)) + u_coeff * u, with u = log m.
struct LogCombination {
  RationalFunction<Rational> rational;
  std::vector<LogTerm> logs;
  Rational u_coeff{0};
  /// Integration constant; always reported as 0.
  Rational constant{0};
};

/// F with derive_u(F) = D.  Throws NonElementaryLog when the logarithmic part
/// needs irrational residues.
LogCombination integrate_du(const RationalFunction<Rational>& D);

/// derive_u of the presented function, as a rational function.
RationalFunction<Rational> derive_u(const LogCombination& F);

std::string to_string(const LogCombination& F);

/// Hermite reduction of a / d (deg a < deg d, d monic with d(0) != 0):
/// a / d = (g)' + w / dstar with dstar squarefree and ' = d/dm.
struct HermiteResult {
  RationalFunction<Rational> g;
  LaurentPoly<Rational> w;
  LaurentPoly<Rational> dstar;
};
HermiteResult hermite_reduce(const LaurentPoly<Rational>& a, const LaurentPoly<Rational>& d);

/// Scale to a primitive integer polynomial with positive leading coefficient.
LaurentPoly<Rational> primitive_part(const LaurentPoly<Rational>& p);

}  // namespace qjones
