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

// q-difference operators sum_j a_j(q, Q) E^j acting on sequences J_N with
// (E J)_N = J_{N+1}, (Q J)_N = q^N J_N, so that E Q = q Q E.

#include <string>
#include <vector>

#include "qjones/bipoly.hpp"

namespace qjones {

/// Coefficients a_j are integer Laurent polynomials in (q, Q): x = q, y = Q.
struct QDiffOperator {
  std::string knot;
  std::vector<BiPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  friend bool operator==(const QDiffOperator& a, const QDiffOperator& b) { return a.coeffs == b.coeffs; }
};

/// a_{j,p}(m) for j = 0..d, p = 0..p_max: table[j][p].
using HbarTable = std::vector<std::vector<LaurentPoly<Rational>>>;

/// Values J_1, J_2, ... (entry N-1 holds J_N) as Laurent polynomials in q.
using QSequence = std::vector<LaurentPoly<Rational>>;

BiPoly q_monomial(const Integer& c, int a, int b);

QDiffOperator parse_operator(const std::string& text);
QDiffOperator load_operator(const std::string& path);
std::string serialize_operator(const QDiffOperator& A);

/// Content 1, lowest E-power 0, lowest q- and Q-powers 0, and the a_d term
/// with the largest (Q-power, q-power) positive.
QDiffOperator normalize_operator(const QDiffOperator& A);

/// sum_j a_j(q, q^N0) J_{N0+j}.
LaurentPoly<Rational> apply_operator(const QDiffOperator& A, const QSequence& J, int N0);

/// q -> 1, Q -> m^2, E -> l, unit-normalized.
BiPoly specialize_q1(const QDiffOperator& A);

/// With q = e^{2 hbar} and Q = m^2: a_{j,p}(m) = sum c (2 alpha)^p / p! m^{2 beta}.
HbarTable hbar_expand(const QDiffOperator& A, int p_max);

/// a_j(q, q^N) as a Laurent polynomial in q.
LaurentPoly<Rational> evaluate_at_index(const BiPoly& a, int N);

/// The figure-eight operator as printed (unnormalized), with X read as E.
QDiffOperator raw_operator_41();
/// Normal form of raw_operator_41().
QDiffOperator builtin_operator_41();
/// E - 1.
QDiffOperator unknot_operator();

}  // namespace qjones
