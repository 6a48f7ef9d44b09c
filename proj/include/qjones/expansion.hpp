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
#include <utility>
#include <vector>

#include "qjones/branch.hpp"
#include "qjones/integrate.hpp"
#include "qjones/qoperator.hpp"

namespace qjones {

struct Partition {
  std::vector<int> parts;  // weakly decreasing
  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
};

/// All partitions of n with |Aut| = prod over k of (multiplicity of k)!.
/// n = 0 gives the empty partition with aut 1.
std::vector<std::pair<Partition, Integer>> partitions_with_aut(int n);

inline bool is_zero_value(const AbelianField& x) { return x.is_zero(); }
inline bool is_zero_value(const GeometricField& x) { return x.is_zero(); }
/// Numeric values count as zero below half the working digits.
inline bool is_zero_value(const Series& x) {
  return abs(x.value()) < pow(Real(10), -static_cast<int>(Real::default_precision()) / 2);
}

/// Order-by-order solver for S_n' along one branch.
///
/// S_0^{(k)} for k >= 2 comes from the branch stream, S_n' (n >= 1) from
/// next_order(); higher derivatives are cached as they are requested.
template <class F>
class ExpansionState {
 public:
  ExpansionState(HbarTable table, BranchSpec<F> branch) : table_(std::move(table)), branch_(std::move(branch)) {
    const int d = static_cast<int>(table_.size()) - 1;
    lpow_.push_back(one());
    for (int j = 1; j <= d; ++j) lpow_.push_back(lpow_.back() * branch_.l);
  }

  const BranchSpec<F>& branch() const { return branch_; }
  int order() const { return static_cast<int>(s_.size()); }
  int max_p() const { return table_.empty() ? -1 : static_cast<int>(table_[0].size()) - 1; }

  F zero() const { return branch_.embed(LaurentPoly<Rational>(Var::m)); }
  F one() const { return branch_.embed(LaurentPoly<Rational>(1)); }

  /// sum_j l^j a_{j,0}(m); the characteristic equation along the branch.
  F characteristic() const {
    F r = zero();
    for (std::size_t j = 0; j < table_.size(); ++j) r += lpow_[j] * coeff(j, 0);
    return r;
  }

  /// L = sum_j l^j a_{j,0}(m) j.
  F denominator() const {
    F r = zero();
    for (std::size_t j = 1; j < table_.size(); ++j) r += lpow_[j] * coeff(j, 0) * Rational(static_cast<long>(j));
    return r;
  }

  /// S_n^{(k)}, k >= 1 (and k >= 2 for n = 0).
  F derivative(int n, int k) {
    if (k < 1 || (n == 0 && k < 2)) throw std::invalid_argument("derivative: order out of range");
    if (n == 0) return branch_.supplier(k - 1);
    if (n > order()) throw ComputationError("S_" + std::to_string(n) + " is not computed yet");
    auto& col = s_[static_cast<std::size_t>(n - 1)];
    while (static_cast<int>(col.size()) < k) col.push_back(derive_u(col.back()));
    return col[static_cast<std::size_t>(k - 1)];
  }

  /// Coefficients of B_t(j) in j (index = power of j).  With `truncated` the
  /// S_t' j term is left out; it is required when S_t is not yet known.
  std::vector<F> b_poly(int t, bool truncated = false) {
    if (t < 1) throw std::invalid_argument("b_poly: t must be >= 1");
    if (!truncated && t > order()) throw ComputationError("b_poly: S_" + std::to_string(t) + "' is missing");
    std::vector<F> c(static_cast<std::size_t>(t) + 2, zero());
    Integer fact = 1;
    for (int k = 1; k <= t + 1; ++k) {  // k = t - r, coefficient S_{t+1-k}^{(k)} / k!
      fact *= k;
      const int n = t + 1 - k;
      if (k == 1 && truncated) continue;
      c[static_cast<std::size_t>(k)] = derivative(n, k) * Rational(1, fact);
    }
    return c;
  }

  /// Solve for S_n', n = order() + 1, and append it.
  F next_order() {
    const int n = order() + 1;
    if (n > max_p()) throw ComputationError("next_order: hbar table too short");
    const F L = denominator();
    if (is_zero_value(L)) throw DegenerateBranch("degenerate branch: sum_j j l^j a_{j,0} vanishes");
    std::vector<std::vector<F>> b;  // b[t-1] = coefficients of B_t
    for (int t = 1; t <= n; ++t) b.push_back(b_poly(t, t == n));
    const auto parts = all_partitions(n);
    F num = zero();
    for (std::size_t j = 0; j < table_.size(); ++j) {
      std::vector<F> bj;  // B_t(j)
      for (int t = 1; t <= n; ++t) bj.push_back(eval_j(b[static_cast<std::size_t>(t - 1)], static_cast<long>(j)));
      F inner = zero();
      for (int p = 1; p <= n; ++p)
        if (!table_[j][static_cast<std::size_t>(p)].is_zero()) inner += coeff(j, p) * exp_part(bj, parts[static_cast<std::size_t>(n - p)]);
      // The partition (n) uses B_n without its unknown S_n' j term.
      inner += coeff(j, 0) * exp_part(bj, parts[static_cast<std::size_t>(n)]);
      num += lpow_[j] * inner;
    }
    F sn = zero() - num / L;
    s_.push_back({sn});
    return sn;
  }

  /// Forget cached higher derivatives (S_n' themselves are kept).
  void clear_caches() {
    for (auto& col : s_) col.resize(1);
  }

 private:
  F coeff(std::size_t j, int p) const { return branch_.embed(table_[j][static_cast<std::size_t>(p)]); }

  F eval_j(const std::vector<F>& c, long j) const {
    F r = zero();
    Rational jp = 1;
    for (std::size_t k = 1; k < c.size(); ++k) {
      jp *= j;
      if (j != 0) r += c[k] * jp;
    }
    return r;
  }

  const std::vector<std::vector<std::pair<Partition, Integer>>>& all_partitions(int n) {
    while (static_cast<int>(parts_.size()) <= n) parts_.push_back(partitions_with_aut(static_cast<int>(parts_.size())));
    return parts_;
  }

  // sum over mu of B_mu / |Aut mu|.
  F exp_part(const std::vector<F>& bj, const std::vector<std::pair<Partition, Integer>>& ps) const {
    F r = zero();
    for (const auto& [mu, aut] : ps) {
      F term = one();
      for (int part : mu.parts) term *= bj[static_cast<std::size_t>(part - 1)];
      r += term * Rational(1, aut);
    }
    return r;
  }

  HbarTable table_;
  BranchSpec<F> branch_;
  std::vector<F> lpow_;
  std::vector<std::vector<F>> s_;  // s_[n-1][k-1] = S_n^{(k)}
  std::vector<std::vector<std::pair<Partition, Integer>>> parts_;
};

/// One order of an expansion.
template <class F>
struct OrderResult {
  int n = 0;
  F dS;
  std::optional<LogCombination> S;  // presentation, exact kinds only
  std::optional<int> delta_power;     // abelian: den(S_n) = Delta(m^2)^k
  std::optional<bool> torsion_shape;  // geometric 4_1: see torsion_shape()
};

template <class F>
struct ExpansionResult {
  std::string knot;
  BranchKind kind = BranchKind::abelian;
  std::optional<Rational> delta;
  std::vector<OrderResult<F>> orders;
};

inline std::optional<LogCombination> present(const AbelianField& x) { return integrate_du(x); }
inline std::optional<LogCombination> present(const GeometricField& x) {
  if (!x.is_rational()) return std::nullopt;
  return integrate_du(x.a());
}
inline std::optional<LogCombination> present(const Series&) { return std::nullopt; }

/// Runs the engine to order n_max after checking the characteristic equation.
template <class F, class ResidualCheck>
ExpansionResult<F> expand(const std::string& knot, const QDiffOperator& A, const BranchSpec<F>& branch, int n_max,
                          ResidualCheck&& residual_ok) {
  if (n_max < 1) throw ValidationError("expand: order must be >= 1");
  ExpansionState<F> st(hbar_expand(A, n_max), branch);
  if (!residual_ok(st.characteristic()))
    throw ComputationError("characteristic equation does not vanish on the chosen branch");
  ExpansionResult<F> res;
  res.knot = knot;
  res.kind = branch.kind;
  res.delta = branch.delta;
  for (int n = 1; n <= n_max; ++n) {
    OrderResult<F> o;
    o.n = n;
    o.dS = st.next_order();
    o.S = present(o.dS);
    res.orders.push_back(std::move(o));
  }
  return res;
}

template <class F>
ExpansionResult<F> expand_exact(const std::string& knot, const QDiffOperator& A, const BranchSpec<F>& branch,
                                int n_max) {
  return expand(knot, A, branch, n_max, [](const F& r) { return is_zero_value(r); });
}

/// k with den(f) = Delta(m^2)^k up to a constant, given Delta(t); nullopt
/// when f is zero or its denominator is not a power of Delta(m^2).
std::optional<int> delta_power(const RationalFunction<Rational>& f, const LaurentPoly<Rational>& alexander_t);

/// Whether s^(3n-1) * S_n' has Laurent components, the derivative form of
/// S_n = (m^2 / sqrt(-R))^(3n-3) * G_n(m) with G_n Laurent.  n >= 2.
bool torsion_shape(const GeometricField& dS, int n);

/// Fills the per-order observations; no-ops where they do not apply.
void observe(ExpansionResult<AbelianField>& r, const std::optional<LaurentPoly<Rational>>& alexander_t);
void observe(ExpansionResult<GeometricField>& r);

}  // namespace qjones
