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

#include <optional>
#include <vector>

#include "qjones/expansion.hpp"
#include "qjones/mp.hpp"

namespace qjones {

struct KnotRecord;

struct FitOptions {
  int N_min = 50;
  int N_max = 400;
  int N_step = 10;
  unsigned prec = 256;
  /// Extra basis functions beyond d_max that absorb the truncation tail.
  int extra_terms = 8;
};

struct FitCoefficient {
  int d;
  Complex value;
  Real error;  // spread across the window diagnostics
};

struct WindowEstimate {
  int N_lo;
  int N_hi;
  std::vector<Complex> C;  // collocation solution on the window
};

struct FitReport {
  Complex u;
  FitOptions options;
  std::vector<FitCoefficient> C;
  double condition = 0;  // of the scaled least-squares design matrix
  std::vector<WindowEstimate> windows;
};

/// J_N(e^{2u/N}) ~ sum_d C_d (u/N)^d over N in [N_min, N_max]: a least-squares
/// fit over the whole window, with collocation solves on sliding sub-windows
/// and a fit with two fewer basis terms as error diagnostics.
FitReport fit_series(const KnotRecord& record, const Complex& u, int d_max, const FitOptions& opt);

/// exp(S_1) * sum over partitions mu of d of prod_i S_{mu_i + 1} / |Aut mu|.
/// S[k] holds S_{k+2}.
template <class V>
V mmr_cd(const V& exp_s1, const std::vector<V>& S, int d) {
  if (d < 0) throw ValidationError("mmr_cd: d must be >= 0");
  if (static_cast<int>(S.size()) < d) throw ValidationError("mmr_cd: S_" + std::to_string(d + 1) + " is missing");
  V sum = exp_s1 * V(0);
  for (const auto& [mu, aut] : partitions_with_aut(d)) {
    V term = V(1);
    for (int part : mu.parts) term = term * S[static_cast<std::size_t>(part - 1)];
    sum = sum + term / V(Real(aut.str()));
  }
  return exp_s1 * sum;
}

}  // namespace qjones
