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

#include "qjones/mp.hpp"
#include "qjones/qoperator.hpp"

namespace qjones {

struct KnotRecord;

/// J_N(4_1; q) = sum_{k=0}^{N-1} q^{kN} (q^{-N-1}; q^{-1})_k (q^{1-N}; q)_k.
LaurentPoly<Rational> jones_41(int N);

struct JonesSequence {
  std::string knot;
  QSequence values;  // values[N-1] = J_N
  std::string provenance;  // "multisum" or "recursion"
};

/// J_{N+d} = -(sum_{j<d} a_j(q, q^N) J_{N+j}) / a_d(q, q^N), checked to stay Laurent.
JonesSequence jones_from_recursion(const KnotRecord& record, const QSequence& init, int N_max);

/// J_N at q = e^{2u/N}; the multisum is used when the record has one.
struct NumericValue {
  Complex value;
  Real condition{1};  // sum of |terms| / |value|
};
NumericValue jones_numeric(const KnotRecord& record, int N, const Complex& u, unsigned prec);

/// Value of the multisum for 4_1 at an arbitrary q (working precision).
NumericValue jones_41_at(int N, const Complex& q);

struct GrowthRow {
  int N;
  Real estimate;  // (2 pi / N) log |J_N(e^{2 pi i / N})|
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  double limit = 0;
  double error = 0;
};

/// Growth estimates plus an extrapolated limit: the estimates are fitted by
/// V + a log(N)/N + sum_k b_k N^-k, and the error bar is the spread between
/// fits of neighbouring sizes.
GrowthReport kashaev_growth(const KnotRecord& record, const std::vector<int>& N_list, unsigned prec);

}  // namespace qjones
