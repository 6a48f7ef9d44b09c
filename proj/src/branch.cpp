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

#include "qjones/branch.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

#include "qjones/roots.hpp"

namespace qjones {

namespace {

using P = LaurentPoly<Rational>;
using RF = RationalFunction<Rational>;

P m(int e, const Rational& c = 1) { return P::monomial(c, e, Var::m); }

}  // namespace

std::string to_string(BranchKind k) {
  switch (k) {
    case BranchKind::abelian:
      return "abelian";
    case BranchKind::geometric41:
      return "geometric";
    case BranchKind::numeric:
      return "numeric";
  }
  return "?";
}

BranchSpec<AbelianField> abelian_branch() {
  BranchSpec<AbelianField> b;
  b.kind = BranchKind::abelian;
  b.l = RF(1);
  b.delta = Rational(0);
  b.embed = [](const P& p) { return RF(p); };
  b.stream = std::make_shared<DerivativeStream<AbelianField>>(RF(0));
  return b;
}

LaurentPoly<Rational> radicand_41() { return P::from_terms({{0, 1}, {2, -2}, {4, -1}, {6, -2}, {8, 1}}); }

BiPoly geometric_factor_41() {
  return parse_bipoly("l - l*m^2 - m^4 - 2*l*m^4 - l^2*m^4 - l*m^6 + l*m^8", 'l', 'm');
}

BranchSpec<GeometricField> geometric_branch_41() {
  auto ctx = make_radicand(radicand_41());
  BranchSpec<GeometricField> b;
  b.kind = BranchKind::geometric41;
  const P a = P::from_terms({{0, -1}, {2, 1}, {4, 2}, {6, 1}, {8, -1}});
  const P c = m(4) - P(1);
  const RF scale = RF(m(-4) * Rational(-1, 2));
  b.l = GeometricField(ctx, RF(a) * scale, RF(c) * scale);
  b.delta = Rational(3);
  b.embed = [ctx](const P& p) { return GeometricField(ctx, RF(p)); };
  b.stream = std::make_shared<DerivativeStream<GeometricField>>(derive_u(b.l) / b.l);
  return b;
}

Complex evaluate(const AbelianField& x, const Complex& mv) {
  return evaluate(x, mv, [](const Rational& c) { return to_complex(c); });
}

Complex evaluate(const GeometricField& x, const Complex& mv, const Complex& s) {
  return evaluate(x.a(), mv) + evaluate(x.b(), mv) * s;
}

Complex s_value_41(const Complex& mv) {
  static const int sign = [] {
    PrecisionGuard g(128);
    const Complex ms = exp(Complex(Real(0), Real("0.99") * pi_real()));
    const Complex s = sqrt(evaluate(RF(radicand_41()), ms));
    const Complex vp = evaluate(geometric_branch_41().supplier(1), ms, s);
    return vp.imag() > 0 ? 1 : -1;
  }();
  const Complex s = sqrt(evaluate(RF(radicand_41()), mv));
  return sign > 0 ? s : -s;
}

std::vector<NumericBranch> numeric_branches(const BiPoly& A, const Complex& m0, unsigned prec, int order) {
  if (prec < 64) throw ValidationError("numeric_branches: precision must be >= 64 bits");
  if (order < 1) throw ValidationError("numeric_branches: order must be >= 1");
  PrecisionGuard guard(prec);
  const std::size_t len = static_cast<std::size_t>(order) + 1;
  const int lo = A.min_x(), hi = A.max_x();
  std::vector<Series> cs;
  std::vector<Complex> c0;
  for (int i = lo; i <= hi; ++i) {
    cs.push_back(embed_at(A.x_coefficient(i, Var::m), m0, len));
    c0.push_back(cs.back().value());
  }
  while (!c0.empty() && c0.back() == Complex(0)) {
    c0.pop_back();
    cs.pop_back();
  }
  if (c0.empty() || (c0.size() == 1)) {
    if (c0.empty()) throw ValidationError("numeric_branches: A(l, m0) vanishes identically");
    return {};
  }
  RootReport rep = polynomial_roots(c0);
  const Real tol_res = pow(Real(2), 1 - static_cast<int>(prec) / 4);
  if (!rep.converged && rep.max_residual > tol_res)
    throw ComputationError("numeric_branches: root finder did not converge (residual " +
                           rep.max_residual.str(6, std::ios_base::scientific) + ")");
  const Real tol_mult = pow(Real(2), -static_cast<int>(prec) / 8);
  std::vector<NumericBranch> out;
  const auto poly_at = [&](const Series& l, Series& value, Series& deriv) {
    value = Series(Complex(0), len);
    deriv = Series(Complex(0), len);
    for (std::size_t k = cs.size(); k-- > 0;) {
      deriv = deriv * l + value;
      value = value * l + cs[k];
    }
  };
  for (std::size_t i = 0; i < rep.roots.size(); ++i) {
    NumericBranch nb;
    nb.root = rep.roots[i];
    for (std::size_t j = 0; j < rep.roots.size(); ++j)
      if (j != i && abs(rep.roots[j] - nb.root) < tol_mult * (1 + abs(nb.root))) ++nb.multiplicity;
    Complex v, d;
    horner(c0, nb.root, v, d);
    Real scale(0);
    for (const auto& c : c0) scale += abs(c);
    nb.residual = abs(v) / (scale * (1 + pow(abs(nb.root), static_cast<int>(c0.size()) - 1)));
    nb.expandable = nb.multiplicity == 1 && nb.root != Complex(0);
    nb.spec.kind = BranchKind::numeric;
    nb.spec.embed = [m0, len](const P& p) { return embed_at(p, m0, len); };
    if (nb.expandable) {
      // Newton iteration in series arithmetic; each step doubles the valid order.
      Series l(nb.root, len);
      for (std::size_t it = 0; (std::size_t(1) << it) <= 2 * len; ++it) {
        Series value, deriv;
        poly_at(l, value, deriv);
        l = l - value / deriv;
      }
      nb.spec.l = l;
      nb.spec.stream = std::make_shared<DerivativeStream<Series>>(derive_u(l) / l);
    } else {
      nb.spec.l = Series(nb.root, len);
      nb.spec.stream = std::make_shared<DerivativeStream<Series>>(Series());
    }
    out.push_back(std::move(nb));
  }
  return out;
}

double volume_41() {
  PrecisionGuard guard(128);
  const auto branch = geometric_branch_41();
  const auto f = [&](double theta) {
    const Complex mv(Real(std::cos(theta)), Real(std::sin(theta)));
    const Complex lv = evaluate(branch.l, mv, s_value_41(mv));
    return std::fabs(static_cast<double>(log(abs(lv))));
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double pi = boost::math::constants::pi<double>();
  return 2 * integrator.integrate(f, 2 * pi / 3, pi);
}

}  // namespace qjones
