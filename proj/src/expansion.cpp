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

#include "qjones/expansion.hpp"

#include <functional>
#include <map>

namespace qjones {

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::vector<std::pair<Partition, Integer>> partitions_with_aut(int n) {
  if (n < 0) throw std::invalid_argument("partitions_with_aut: n must be >= 0");
  std::vector<std::pair<Partition, Integer>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      Integer aut = 1;
      std::map<int, int> mult;
      for (int p : cur) aut *= ++mult[p];
      out.push_back({Partition{cur}, aut});
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::optional<int> delta_power(const RationalFunction<Rational>& f, const LaurentPoly<Rational>& alexander_t) {
  if (f.is_zero()) return std::nullopt;
  const LaurentPoly<Rational> base = poly::monic(substitute_power(alexander_t, 2, Var::m).stripped());
  if (poly::degree(base) <= 0) return std::nullopt;
  LaurentPoly<Rational> d = f.den();
  int k = 0;
  while (!d.is_constant()) {
    auto [q, r] = poly::divmod(d, base);
    if (!r.is_zero()) return std::nullopt;
    d = std::move(q);
    ++k;
  }
  return k;
}

bool torsion_shape(const GeometricField& dS, int n) {
  if (n < 2) throw std::invalid_argument("torsion_shape: n must be >= 2");
  GeometricField x = dS;
  const GeometricField s = GeometricField::generator(dS.radicand());
  for (int k = 0; k < 3 * n - 1; ++k) x *= s;
  return x.a().is_laurent() && x.b().is_laurent();
}

void observe(ExpansionResult<AbelianField>& r, const std::optional<LaurentPoly<Rational>>& alexander_t) {
  if (!alexander_t) return;
  for (auto& o : r.orders)
    if (o.n >= 2 && o.S && o.S->logs.empty()) o.delta_power = delta_power(o.S->rational, *alexander_t);
}

void observe(ExpansionResult<GeometricField>& r) {
  if (r.kind != BranchKind::geometric41) return;
  for (auto& o : r.orders)
    if (o.n >= 2) o.torsion_shape = torsion_shape(o.dS, o.n);
}

}  // namespace qjones
