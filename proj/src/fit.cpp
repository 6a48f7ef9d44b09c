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

#include "qjones/fit.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "qjones/catalog.hpp"
#include "qjones/jones.hpp"

namespace qjones {

namespace {

using MatR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Least squares for complex right-hand sides with a real design matrix.
std::vector<Complex> solve(const MatR& M, const std::vector<Complex>& y, double* cond) {
  const Eigen::Index n = M.rows();
  VecR re(n), im(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    re(i) = y[static_cast<std::size_t>(i)].real();
    im(i) = y[static_cast<std::size_t>(i)].imag();
  }
  Eigen::JacobiSVD<MatR> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (cond) *cond = static_cast<double>(sv(0) / sv(sv.size() - 1));
  const VecR xr = svd.solve(re), xi = svd.solve(im);
  std::vector<Complex> out;
  for (Eigen::Index k = 0; k < xr.size(); ++k) out.emplace_back(xr(k), xi(k));
  return out;
}

}  // namespace

FitReport fit_series(const KnotRecord& record, const Complex& u, int d_max, const FitOptions& opt) {
  if (d_max < 0) throw ValidationError("fit: dmax must be >= 0");
  if (opt.N_min < 1 || opt.N_max <= opt.N_min || opt.N_step < 1) throw ValidationError("fit: bad N range");
  PrecisionGuard guard(opt.prec);
  std::vector<int> Ns;
  for (int N = opt.N_min; N <= opt.N_max; N += opt.N_step) Ns.push_back(N);
  const int terms = d_max + 1 + std::max(opt.extra_terms, 0);
  if (static_cast<int>(Ns.size()) < terms + 2)
    throw ValidationError("fit: N range has " + std::to_string(Ns.size()) + " points, need at least " +
                          std::to_string(terms + 2));

  std::vector<Complex> y;
  for (int N : Ns) y.push_back(jones_numeric(record, N, u, opt.prec).value);

  // Columns use x = N_min / N so the design matrix stays well scaled; the
  // coefficient of (u/N)^d is recovered as c_d (N_min / u)^d.
  const auto design = [&](const std::vector<int>& rows, int k) {
    MatR M(static_cast<Eigen::Index>(rows.size()), k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Real x = Real(opt.N_min) / Real(rows[i]);
      Real p = 1;
      for (int c = 0; c < k; ++c) {
        M(static_cast<Eigen::Index>(i), c) = p;
        p *= x;
      }
    }
    return M;
  };
  const auto unscale = [&](std::vector<Complex> c) {
    const Complex f = Complex(Real(opt.N_min)) / u;
    Complex p(1);
    for (auto& x : c) {
      x *= p;
      p *= f;
    }
    return c;
  };
  const auto pick = [&](const std::vector<std::size_t>& idx) {
    std::vector<int> rows;
    std::vector<Complex> ys;
    for (auto i : idx) {
      rows.push_back(Ns[i]);
      ys.push_back(y[i]);
    }
    return std::pair(rows, ys);
  };

  FitReport rep;
  rep.u = u;
  rep.options = opt;
  if (u == Complex(0)) {
    // Every J_N(1) is 1; the series collapses to C_0.
    for (int d = 0; d <= d_max; ++d) rep.C.push_back({d, Complex(d == 0 ? 1 : 0), Real(0)});
    return rep;
  }
  double cond = 0;
  const auto full = unscale(solve(design(Ns, terms), y, &cond));
  rep.condition = cond;
  if (cond > 1e40) throw ComputationError("fit: ill-conditioned design matrix (condition " + std::to_string(cond) + ")");
  const auto smaller = unscale(solve(design(Ns, terms - 2), y, nullptr));

  // Sliding collocation windows with as many points as basis terms.
  const std::size_t w = static_cast<std::size_t>(terms);
  const std::size_t stride = std::max<std::size_t>(1, (Ns.size() - w) / 4);
  for (std::size_t start = 0; start + w <= Ns.size(); start += stride) {
    std::vector<std::size_t> idx;
    for (std::size_t i = start; i < start + w; ++i) idx.push_back(i);
    auto [rows, ys] = pick(idx);
    rep.windows.push_back({rows.front(), rows.back(), unscale(solve(design(rows, terms), ys, nullptr))});
  }
  for (int d = 0; d <= d_max; ++d) {
    const auto k = static_cast<std::size_t>(d);
    Real err = abs(full[k] - smaller[k]);
    // The last (largest-N) window is the one closest to the asymptotic regime.
    if (!rep.windows.empty()) err = std::max(err, Real(abs(full[k] - rep.windows.back().C[k])));
    rep.C.push_back({d, full[k], err});
  }
  return rep;
}

}  // namespace qjones
