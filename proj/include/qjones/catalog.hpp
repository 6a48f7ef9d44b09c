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
#include <string>
#include <vector>

#include "qjones/qoperator.hpp"

namespace qjones {

/// A-polynomial of the twist knot K_p (K_1 = 3_1, K_-1 = 4_1, K_2 = 5_2, K_-2 = 6_1).
BiPoly twist_apoly(int p);
/// 1 + l m^{pq} for coprime p, q with |p|, |q| >= 2.
BiPoly torus_apoly(int p, int q);
/// Symmetric Alexander polynomial in t.
LaurentPoly<Rational> alexander(const std::string& name);

/// Twist index for catalog names ("4_1" -> -1, "K_3" -> 3); nullopt otherwise.
std::optional<int> twist_index(const std::string& name);

struct KnotRecord {
  std::string name;
  std::optional<BiPoly> apoly;
  std::optional<LaurentPoly<Rational>> alexander;
  std::optional<QDiffOperator> op;
  /// J_1 .. J_d for the recursion (from the multisum or a data file).
  std::optional<QSequence> initial;
  bool has_multisum = false;   // 4_1 and the unknot
  std::string operator_source;  // "builtin", a file path, or empty
  /// Result of the AJ divisibility cross-check; nullopt when not run.
  std::optional<bool> aj_consistent;
};

/// Directory holding manifest.txt; the QJONES_DATA_DIR environment variable
/// overrides the compiled-in default.
std::string data_dir();

struct ManifestEntry {
  std::string name;
  std::string operator_file;
  int degree = 0;
  std::string initial_file;  // may be empty
};

/// Lines "<name> <operator-file> <degree> [initial-values-file]"; relative
/// paths are resolved against the manifest's directory.
std::vector<ManifestEntry> load_manifest(const std::string& path);

/// Lines "coeff <N> <c> <e>": J_N gets c q^e.  Returns J_1 .. J_max.
QSequence load_initial_values(const std::string& path);

KnotRecord knot_record(const std::string& name, const std::optional<std::string>& operator_path = std::nullopt,
                       const std::optional<std::string>& initial_path = std::nullopt);

}  // namespace qjones
