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

#include "qjones/jones.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "qjones/catalog.hpp"
#include "qjones/poly_algorithms.hpp"

namespace qjones {

namespace {

using P = LaurentPoly<Rational>;

P qm(int e, const Rational& c = 1) { return P::monomial(c, e, Var::q); }

}  // namespace

P jones_41(int N) {
  if (N < 1) throw ValidationError("jones_41: N must be >= 1");
  P sum(Var::q), prod(1, Var::q);
  for (int k = 0; k < N; ++k) {
    if (k > 0) prod = prod * (P(1, Var::q) - qm(-N - k)) * (P(1, Var::q) - qm(k - N));
    sum += prod.shifted(k * N);
  }
  return sum;
}

JonesSequence jones_from_recursion(const KnotRecord& record, const QSequence& init, int N_max) {
  if (!record.op) throw ValidationError("knot '" + record.name + "' has no operator");
  const QDiffOperator& A = *record.op;
  const int d = A.degree();
  if (static_cast<int>(init.size()) < d)
    throw ValidationError("need " + std::to_string(d) + " initial values, got " + std::to_string(init.size()));
  JonesSequence s;
  s.knot = record.name;
  s.provenance = "recursion";
  s.values.assign(init.begin(), init.begin() + d);
  for (int N = 1; static_cast<int>(s.values.size()) < N_max; ++N) {
    P lead = evaluate_at_index(A.coeffs[static_cast<std::size_t>(d)], N);
    if (lead.is_zero()) throw ComputationError("leading coefficient vanishes at N = " + std::to_string(N));
    P rhs(Var::q);
    for (int j = 0; j < d; ++j)
      rhs -= evaluate_at_index(A.coeffs[static_cast<std::size_t>(j)], N) * s.values[static_cast<std::size_t>(N + j - 1)];
    // rhs / lead, both Laurent: divide the stripped parts and shift back.
    const P ls = lead.stripped();
    if (rhs.is_zero()) {
      s.values.push_back(P(Var::q));
      continue;
    }
    auto [quo, rem] = poly::divmod(rhs.stripped(), ls);
    if (!rem.is_zero())
      throw ComputationError("recursion leaves the Laurent polynomials at N = " + std::to_string(N + d) +
                             " (wrong operator or initial values?)");
    s.values.push_back(quo.shifted(rhs.low() - lead.low()));
  }
  s.values.resize(static_cast<std::size_t>(std::max(N_max, 0)));
  return s;
}

NumericValue jones_41_at(int N, const Complex& q) {
  Complex sum(0), prod(1), qN = ipow(q, N);
  Real mags(0);
  Complex qk(1);  // q^{kN}
  const Complex qinv = Complex(1) / q;
  Complex a = ipow(qinv, N + 1);  // q^{-N-1-i}
  Complex b = ipow(q, 1 - N);     // q^{1-N+i}
  for (int k = 0; k < N; ++k) {
    if (k > 0) {
      prod *= (Complex(1) - a) * (Complex(1) - b);
      a *= qinv;
      b *= q;
      qk *= qN;
    }
    const Complex t = qk * prod;
    sum += t;
    mags += abs(t);
  }
  NumericValue v;
  v.value = sum;
  v.condition = sum == Complex(0) ? Real(std::numeric_limits<double>::infinity()) : Real(mags / abs(sum));
  return v;
}

NumericValue jones_numeric(const KnotRecord& record, int N, const Complex& u, unsigned prec) {
  if (N < 1) throw ValidationError("jones_numeric: N must be >= 1");
  if (prec < 64) throw ValidationError("jones_numeric: precision must be >= 64 bits");
  PrecisionGuard guard(prec);
  const Complex q = exp(Complex(2) * u / Complex(Real(N)));
  NumericValue v;
  if (record.name == "unknot") {
    v.value = Complex(1);
  } else if (record.has_multisum) {
    v = jones_41_at(N, q);
  } else {
    if (!record.initial) throw ValidationError("knot '" + record.name + "' has no initial values");
    const JonesSequence s = jones_from_recursion(record, *record.initial, N);
    const P& J = s.values[static_cast<std::size_t>(N - 1)];
    Complex sum(0);
    Real mags(0);
    J.for_each_term([&](int e, const Rational& c) {
      const Complex t = to_complex(c) * ipow(q, e);
      sum += t;
      mags += abs(t);
    });
    v.value = sum;
    v.condition = sum == Complex(0) ? Real(std::numeric_limits<double>::infinity()) : Real(mags / abs(sum));
  }
  // Cancellation beyond all but 64 bits of the working precision is an error.
  if (v.condition > pow(Real(2), static_cast<int>(prec) - 64))
    throw PrecisionLoss("J_" + std::to_string(N) + " loses precision (condition " + v.condition.str(6, std::ios_base::scientific) + ")");
  return v;
}

GrowthReport kashaev_growth(const KnotRecord& record, const std::vector<int>& N_list, unsigned prec) {
  if (N_list.empty()) throw ValidationError("growth: empty N list");
  if (!std::is_sorted(N_list.begin(), N_list.end()) || N_list.front() < 1)
    throw ValidationError("growth: N list must be ascending and positive");
  GrowthReport rep;
  for (int N : N_list) {
    PrecisionGuard guard(prec);
    const Complex u(Real(0), pi_real());
    const NumericValue v = jones_numeric(record, N, u, prec);
    const Real a = abs(v.value);
    rep.rows.push_back({N, 2 * pi_real() / Real(N) * log(a)});
  }
  const auto fit = [&](int terms) -> double {
    // Unknowns: V, log(N)/N, then N^-1 .. N^-(terms-2).
    const int rows = static_cast<int>(rep.rows.size());
    Eigen::MatrixXd M(rows, terms);
    Eigen::VectorXd y(rows);
    for (int i = 0; i < rows; ++i) {
      const double N = rep.rows[static_cast<std::size_t>(i)].N;
      M(i, 0) = 1;
      if (terms > 1) M(i, 1) = std::log(N) / N;
      for (int k = 2; k < terms; ++k) M(i, k) = std::pow(N, -(k - 1));
      y(i) = static_cast<double>(rep.rows[static_cast<std::size_t>(i)].estimate);
    }
    return M.colPivHouseholderQr().solve(y)(0);
  };
  const int n = static_cast<int>(rep.rows.size());
  if (n == 1) {
    rep.limit = static_cast<double>(rep.rows[0].estimate);
    rep.error = std::numeric_limits<double>::infinity();
    return rep;
  }
  const int terms = std::min(n, 5);
  rep.limit = fit(terms);
  double spread = 0;
  for (int t = std::max(2, terms - 2); t < terms; ++t) spread = std::max(spread, std::fabs(fit(t) - rep.limit));
  rep.error = terms > 2 ? spread : std::numeric_limits<double>::infinity();
  return rep;
}

}  // namespace qjones
