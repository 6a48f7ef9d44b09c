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

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qjones/bipoly.hpp"
#include "qjones/quadext.hpp"
#include "qjones/series.hpp"

namespace qjones {

enum class BranchKind { abelian, geometric41, numeric };
std::string to_string(BranchKind k);

/// Memoized v, v', v'', ... with v = S_0' = log l.  Entry k-1 holds d^k v/du^k.
template <class F>
class DerivativeStream {
 public:
  explicit DerivativeStream(F first) { cache_.push_back(std::move(first)); }

  F get(int k) {
    if (k < 1) throw std::invalid_argument("DerivativeStream: order must be >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(cache_.size()) < k) cache_.push_back(derive_u(cache_.back()));
    return cache_[static_cast<std::size_t>(k - 1)];
  }

 private:
  std::mutex mu_;
  std::vector<F> cache_;
};

/// A root l(u) of the characteristic equation together with the derivative
/// stream of v = log l.  F is the field the expansion runs in.
template <class F>
struct BranchSpec {
  BranchKind kind = BranchKind::abelian;
  F l;
  std::optional<Rational> delta;  // log-hbar exponent; unknown for numeric branches
  /// Image of a Laurent polynomial in m.
  std::function<F(const LaurentPoly<Rational>&)> embed;
  std::shared_ptr<DerivativeStream<F>> stream;

  /// d^k v / du^k for k >= 1.
  F supplier(int k) const { return stream->get(k); }
};

using AbelianField = RationalFunction<Rational>;
using GeometricField = QuadExt<Rational>;

BranchSpec<AbelianField> abelian_branch();

/// R(m) = 1 - 2m^2 - m^4 - 2m^6 + m^8.
LaurentPoly<Rational> radicand_41();
/// l - l m^2 - m^4 - 2 l m^4 - l^2 m^4 - l m^6 + l m^8.
BiPoly geometric_factor_41();
BranchSpec<GeometricField> geometric_branch_41();

/// Numeric image of a + b s at m with s -> s_value.
Complex evaluate(const GeometricField& x, const Complex& m, const Complex& s_value);
Complex evaluate(const AbelianField& x, const Complex& m);

/// The value of s at m fixed by the global sign convention: the sign of
/// sqrt(R(m)) is chosen once, at m = exp(0.99 pi i), so that v' there has
/// positive imaginary part; elsewhere the principal root times that sign.
Complex s_value_41(const Complex& m);

struct NumericBranch {
  BranchSpec<Series> spec;
  Complex root;
  int multiplicity = 1;
  Real residual{0};
  bool expandable = true;
};

/// Every root l of A(l, m0) = 0 (sorted by real, then imaginary part) as a
/// series branch in eps = u - u0, m = m0 e^eps, valid to the given order.
std::vector<NumericBranch> numeric_branches(const BiPoly& A, const Complex& m0, unsigned prec, int order);

/// 2 * integral over theta in (2 pi/3, pi) of |log |l_G(e^{i theta})||: the
/// integral of Im(v du) along the unit circle on the geometric branch.
double volume_41();

}  // namespace qjones
