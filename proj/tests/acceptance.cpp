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

// Acceptance suite: one PASS/FAIL/SKIP line per criterion.  Exit status is 1
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qjones/branch.hpp"
#include "qjones/catalog.hpp"
#include "qjones/cli.hpp"
#include "qjones/expansion.hpp"
#include "qjones/fit.hpp"
#include "qjones/format.hpp"
#include "qjones/integrate.hpp"
#include "qjones/jones.hpp"

using namespace qjones;

namespace {

using P = LaurentPoly<Rational>;
using RF = RationalFunction<Rational>;
using GP = LaurentPoly<GaussianRational>;
using GRF = RationalFunction<GaussianRational>;
using GQ = QuadExt<GaussianRational>;

P m(int e, const Rational& c = 1) { return P::monomial(c, e, Var::m); }
P poly(std::initializer_list<std::pair<int, Rational>> t) { return P::from_terms(std::vector<std::pair<int, Rational>>(t)); }
BiPoly lm(const std::string& s) { return parse_bipoly(s, 'l', 'm'); }

struct Outcome {
  enum Status { pass, fail, skip } status = pass;
  std::string detail;
};

struct Check {
  Outcome& out;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    out.status = Outcome::fail;
    out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
  void note(const std::string& what) { out.detail += (out.detail.empty() ? "" : "; ") + what; }
  void bound(const std::string& label, const Real& value, const char* tol) {
    const bool ok = value < Real(tol);
    note(label + " " + value.str(3, std::ios_base::scientific) + (ok ? " < " : " >= ") + tol);
    if (!ok) out.status = Outcome::fail;
  }
};

std::string sci(const Real& x) { return x.str(3, std::ios_base::scientific); }
std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Outcome o;
  Check c{o};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    o.status = Outcome::fail;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.status != Outcome::skip && secs > budget_s) {
    o.status = Outcome::fail;
    c.note("over time budget");
  }
  const char* tag = o.status == Outcome::pass ? "PASS" : o.status == Outcome::fail ? "FAIL" : "SKIP";
  if (o.status == Outcome::fail) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, budget_s);
  std::cout << tag << " [" << id << "] " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

// ---- 1

void twist_polys(Check& c) {
  c.require(to_string(twist_apoly(1)) == "l + m^6", "K_1");
  c.require(twist_apoly(0) == lm("1"), "K_0");
  c.require(twist_apoly(-1) == lm("-l + l*m^2 + m^4 + 2*l*m^4 + l^2*m^4 + l*m^6 - l*m^8").unit_normalized(), "K_-1");
  c.require(twist_apoly(2) == lm("-l^2 + l^3 + 2*l^2*m^2 + l*m^4 + 2*l^2*m^4 - l*m^6 - l^2*m^8 + 2*l*m^10 + "
                                 "l^2*m^10 + 2*l*m^12 + m^14 - l*m^14")
                                  .unit_normalized(),
            "K_2");
  c.require(twist_apoly(-2) ==
                lm("l^2 - l^3 - 3*l^2*m^2 + l^3*m^2 - 2*l*m^4 - l^2*m^4 + 3*l*m^6 + 3*l^2*m^6 + m^8 + 3*l*m^8 + "
                   "6*l^2*m^8 + 3*l^3*m^8 + l^4*m^8 + 3*l^2*m^10 + 3*l^3*m^10 - l^2*m^12 - 2*l^3*m^12 + l*m^14 - "
                   "3*l^2*m^14 - l*m^16 + l^2*m^16")
                    .unit_normalized(),
            "K_-2");
}

// ---- 2

void abelian41(Check& c) {
  const P delta = m(-2) + m(2) - P(3);
  const auto r = expand_exact("4_1", builtin_operator_41(), abelian_branch(), 4);
  const RF dlog(derive_u(delta), delta);
  c.require(r.orders[0].dS == -dlog, "S_1' != -dlog Delta");
  const auto& s1 = r.orders[0].S;
  c.require(s1 && s1->rational.is_zero() && derive_u(*s1) == -dlog, "S_1 presentation");
  if (s1) c.note("S_1 = " + to_string(*s1));
  c.require(r.orders[1].dS.is_zero(), "S_2' != 0");
  const RF s3 = RF(m(-2) * Rational(4) - P(4) + m(2) * Rational(4)) / pow(RF(delta), 3);
  c.require(r.orders[2].dS == derive_u(s3), "S_3' mismatch");
  c.require(r.orders[2].S && r.orders[2].S->rational == s3 && r.orders[2].S->logs.empty() &&
                r.orders[2].S->u_coeff == 0,
            "S_3 rational part");
  c.require(r.orders[3].dS.is_zero(), "S_4' != 0");
}

// ---- 3

struct GeometricForms {
  RF s1p;  // derivative of the printed S_1^G
  P P2, P3, P4;
  P R;
};

GeometricForms printed_geometric() {
  GeometricForms f;
  f.R = radicand_41();
  f.s1p = RF(P(2)) - RF(derive_u(m(2) - P(1)), m(2) - P(1)) - RF(derive_u(f.R), f.R) * Rational(1, 4);
  f.P2 = poly({{0, 1}, {2, -1}, {4, -2}, {6, 15}, {8, -2}, {10, -1}, {12, 1}});
  f.P3 = poly({{0, -1}, {2, 1}, {4, 2}, {6, -5}, {8, 2}, {10, 1}, {12, -1}});
  f.P4 = poly({{0, 1},      {2, -4},     {4, -128},   {6, 36},   {8, 1074},   {10, -5630},
               {12, 5782},  {14, 7484},  {16, -18311}, {18, 7484}, {20, 5782}, {22, -5630},
               {24, 1074},  {26, 36},    {28, -128},  {30, -4},  {32, 1}});
  return f;
}

// Printed S_2^G, S_3^G, S_4^G in K(i)(m)(s) for sqrt(R) = sigma s.  `i_rule`
// selects sqrt(-R) = i sigma s for the (-R)^{3/2} in S_2; otherwise the
// factor is read as -R sqrt(R).
std::vector<GQ> printed_in_extension(const GeometricForms& f, int sigma, bool i_rule, const RadicandPtr<GaussianRational>& ctx) {
  const GRF R(lift<GaussianRational>(f.R));
  const GaussianRational sg(sigma);
  const GaussianRational I = GaussianRational::imaginary_unit();
  std::vector<GQ> out;
  // (-R)^{3/2} = (-R) * c * s with c = i sigma or sigma
  const GaussianRational c = i_rule ? I * sg : sg;
  // P2 / (12 (-R) c s) = P2 s / (12 (-R) c R)
  const GRF b2 = GRF(lift<GaussianRational>(f.P2)) / (R * R * GaussianRational(-12) * c);
  out.push_back(GQ(ctx, GRF(), b2));
  const GRF a3 = GRF(lift<GaussianRational>(f.P3 * m(6) * Rational(-2))) / (R * R * R);
  out.push_back(GQ(ctx, a3));
  // m^2 P4 / (90 R^{9/2}) = m^2 P4 s / (90 sigma R^5)
  const GRF b4 = GRF(lift<GaussianRational>(f.P4 * m(2))) / (pow(R, 5) * GaussianRational(90) * sg);
  out.push_back(GQ(ctx, GRF(), b4));
  return out;
}

void geometric41(Check& c, bool i_rule, std::string& matched_layout) {
  const auto g = geometric_branch_41();
  const auto r = expand_exact("4_1", builtin_operator_41(), g, 4);
  const GeometricForms f = printed_geometric();
  const GeometricField& s1 = r.orders[0].dS;
  c.require(s1.is_rational(), "S_1' has an s-component");
  c.require(s1.a() == f.s1p, "S_1' != derive_u(printed S_1^G)");
  auto ctx = make_radicand(lift<GaussianRational>(f.R));
  std::string best;
  bool any = false;
  for (int sigma : {1, -1}) {
    const auto forms = printed_in_extension(f, sigma, i_rule, ctx);
    std::string row = "sigma=" + std::to_string(sigma) + ":";
    bool all = true;
    for (int n = 2; n <= 4; ++n) {
      const GQ computed = lift<GaussianRational>(r.orders[static_cast<std::size_t>(n - 1)].dS, ctx);
      const GQ expect = derive_u(forms[static_cast<std::size_t>(n - 2)]);
      const bool ok = computed == expect;
      row += " S_" + std::to_string(n) + (ok ? " ok" : " differs");
      if (!ok && !(computed.is_zero() || expect.is_zero())) {
        // report the ratio when it is a constant
        const GQ q = computed / expect;
        if (q.is_rational() && q.a().is_laurent() && q.a().num().is_constant())
          row += " (ratio " + to_string(q.a()) + ")";
      }
      all = all && ok;
    }
    if (all) {
      any = true;
      matched_layout = row;
    }
    best += (best.empty() ? "" : " | ") + row;
  }
  c.require(any, "no uniform sign of s matches S_2..S_4: " + best);
  if (any) c.note(matched_layout);
}

// ---- 4

struct TwistForms {
  std::string name;
  P delta;  // Delta(m^2)
  RF S2, S3, S4;
};

std::vector<TwistForms> printed_twists() {
  std::vector<TwistForms> v;
  {
    TwistForms t;
    t.name = "5_2";
    t.delta = m(-2) * Rational(2) + m(2) * Rational(2) - P(3);
    const RF D(t.delta);
    t.S2 = RF(m(-2) * Rational(-4) + m(2) * Rational(-4) + P(13)) / (pow(D, 2) * Rational(2));
    t.S3 = -RF(poly({{0, -32}, {2, 104}, {4, 200}, {6, -607}, {8, 200}, {10, 104}, {12, -32}})) /
           (RF(m(6, 8)) * pow(D, 4));
    t.S4 = -RF(poly({{0, 320}, {2, -752}, {4, -3808}, {6, 3052}, {8, 39692}, {10, -78163}, {12, 39692},
                     {14, 3052}, {16, -3808}, {18, -752}, {20, 320}})) /
           (RF(m(10, 24)) * pow(D, 6));
    v.push_back(t);
  }
  {
    TwistForms t;
    t.name = "6_1";
    t.delta = m(-2) * Rational(2) + m(2) * Rational(2) - P(5);
    const RF D(t.delta);
    t.S2 = RF(poly({{2, -4}, {4, 7}, {6, -4}})) / (RF(m(4, 2)) * pow(D, 2));
    t.S3 = -RF(poly({{0, 32}, {2, -504}, {4, 1656}, {6, -2303}, {8, 1656}, {10, -504}, {12, 32}})) /
           (RF(m(6, 8)) * pow(D, 4));
    t.S4 = -RF(poly({{0, 320}, {2, -2512}, {4, 23968}, {6, -103404}, {8, 225900}, {10, -288925}, {12, 225900},
                     {14, -103404}, {16, 23968}, {18, -2512}, {20, 320}})) /
           (RF(m(10, 24)) * pow(D, 6));
    v.push_back(t);
  }
  return v;
}

void twist_expansions(Check& c, Outcome& o) {
  std::vector<std::string> missing;
  std::vector<std::pair<TwistForms, KnotRecord>> todo;
  for (const auto& t : printed_twists()) {
    try {
      todo.emplace_back(t, knot_record(t.name));
    } catch (const ValidationError&) {
      missing.push_back(t.name);
    }
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& n : missing) names += (names.empty() ? "" : ", ") + n;
    o.status = Outcome::skip;
    c.note("NOTICE: operator files for " + names + " are not installed; add them to " + data_dir() +
           "/manifest.txt to run this check");
  }
  for (const auto& [t, rec] : todo) {
    const auto r = expand_exact(t.name, *rec.op, abelian_branch(), 4);
    const RF dlog(derive_u(t.delta), t.delta);
    c.require(r.orders[0].dS == -dlog, t.name + " S_1");
    c.require(r.orders[1].dS == derive_u(t.S2), t.name + " S_2");
    c.require(r.orders[2].dS == derive_u(t.S3), t.name + " S_3");
    c.require(r.orders[3].dS == derive_u(t.S4), t.name + " S_4");
    if (o.status != Outcome::fail) c.note(t.name + " S_1..S_4 match");
  }
}

// ---- 5

void annihilation(Check& c) {
  const QDiffOperator A = builtin_operator_41();
  QSequence J;
  for (int N = 1; N <= 17 + A.degree(); ++N) J.push_back(jones_41(N));
  int bad = 0;
  for (int N0 = 1; N0 <= 17; ++N0)
    if (!apply_operator(A, J, N0).is_zero()) ++bad;
  c.require(bad == 0, std::to_string(bad) + " start indices not annihilated");
  const BiPoly target = lm("l - 1") * lm("l - l*m^2 - m^4 - 2*l*m^4 - l^2*m^4 - l*m^6 + l*m^8");
  c.require(divide_exact(specialize_q1(A), target).has_value(), "specialize_q1 not divisible by (l-1) A_{4_1}");
}

// ---- 6

Complex eval_rf(const RF& f, const Complex& mv) { return evaluate(f, mv); }

void mmr(Check& c) {
  PrecisionGuard guard(256);
  const KnotRecord rec = knot_record("4_1");
  const FitOptions opt;  // N = 50..400 step 10, 256 bits
  const Complex u10 = parse_complex("0.10"), u15 = parse_complex("0.15");
  const FitReport f10 = fit_series(rec, u10, 2, opt);
  const FitReport f15 = fit_series(rec, u15, 2, opt);
  // Delta_{4_1}(m^2) with Delta(1) = 1, so that C_0 -> 1 as u -> 0
  const P delta = P(3) - m(-2) - m(2);
  const Complex m10 = exp(u10);
  const Complex inv_delta = Complex(1) / eval_rf(RF(delta), m10);
  const Real e0 = abs(f10.C[0].value - inv_delta) / abs(inv_delta);
  c.bound("C_0 vs 1/Delta(e^0.2) rel err", e0, "1e-4");

  // S_2 is a constant; C_1 = exp(S_1) S_2 fixes it at each u
  const Complex s2_10 = f10.C[1].value / f10.C[0].value, s2_15 = f15.C[1].value / f15.C[0].value;
  const Real ds2 = abs(s2_10 - s2_15);
  c.bound("|S_2(0.10) - S_2(0.15)|", ds2, "1e-3");

  const auto ex = expand_exact("4_1", rec.op.value(), abelian_branch(), 3);
  const Complex s3 = eval_rf(ex.orders[2].S->rational, m10);
  const Complex pred = mmr_cd(inv_delta, std::vector<Complex>{s2_10, s3}, 2);
  const Real e2 = abs(pred - f10.C[2].value) / abs(f10.C[2].value);
  c.bound("C_2 predicted vs fitted rel err", e2, "1e-3");
}

// ---- 7

void growth(Check& c) {
  std::vector<int> Ns;
  for (int N = 100; N <= 500; N += 50) Ns.push_back(N);
  const GrowthReport g = kashaev_growth(knot_record("4_1"), Ns, 256);
  const double vol = volume_41();
  const double diff = std::abs(g.limit - vol);
  c.require(diff < 1e-2, "limit " + std::to_string(g.limit) + " vs volume " + std::to_string(vol));
  c.require(std::abs(vol - 2.0299) < 1e-3 && std::abs(g.limit - 2.0299) < 1e-2, "values not near 2.0299");
  char buf[160];
  std::snprintf(buf, sizeof buf, "limit %.6f +- %.1e, quadrature %.6f, |diff| %.1e < 1e-2", g.limit, g.error, vol, diff);
  c.note(buf);
}

// ---- 8

P random_poly(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coef(-3, 3);
  P p;
  for (int e = lo; e <= hi; ++e) p += m(e, coef(rng));
  return p;
}

RF random_rf(std::mt19937_64& rng) {
  P d;
  while (d.is_zero()) d = random_poly(rng, -2, 3);
  return RF(random_poly(rng, -3, 3), d);
}

void properties(Check& c) {
  std::mt19937_64 rng(2026);
  int leibniz = 0, inverse = 0, roundtrip = 0;
  for (int k = 0; k < 1000; ++k) {
    const RF f = random_rf(rng), g = random_rf(rng);
    if (derive_u(f * g) == derive_u(f) * g + f * derive_u(g)) ++leibniz;
  }
  auto ctx = make_radicand(radicand_41());
  for (int k = 0; k < 1000; ++k) {
    const RF f = random_rf(rng);
    const GeometricField x(ctx, random_rf(rng), random_rf(rng));
    const bool ok_rf = f.is_zero() || f * f.inverse() == RF(1);
    const bool ok_q = x.norm().is_zero() || x * x.inverse() == GeometricField(ctx, RF(1));
    if (ok_rf && ok_q) ++inverse;
  }
  const P delta = m(-2) + m(2) - P(3);
  const RF dlog(derive_u(delta), delta);
  std::uniform_int_distribution<int> kd(1, 4), cd(-5, 5);
  for (int k = 0; k < 1000; ++k) {
    const int p = kd(rng);
    const RF D = derive_u(RF(random_poly(rng, -2 * p, 2 * p)) / pow(RF(delta), p)) + dlog * Rational(cd(rng)) + RF(cd(rng));
    if (derive_u(integrate_du(D)) == D) ++roundtrip;
  }
  c.require(leibniz == 1000, "Leibniz " + std::to_string(leibniz) + "/1000");
  c.require(inverse == 1000, "inverse " + std::to_string(inverse) + "/1000");
  c.require(roundtrip == 1000, "integration round trip " + std::to_string(roundtrip) + "/1000");

  // exact vs numeric derivative streams on the geometric branch
  PrecisionGuard guard(128);
  const auto g = geometric_branch_41();
  const BiPoly factor = lm("l - l*m^2 - m^4 - 2*l*m^4 - l^2*m^4 - l*m^6 + l*m^8");
  std::uniform_real_distribution<double> ang(0.3, 2.8), rad(0.7, 1.3);
  Real worst(0);
  int points = 0;
  for (int t = 0; t < 5; ++t) {
    const double th = ang(rng), r = rad(rng);
    const Complex m0(Real(r * std::cos(th)), Real(r * std::sin(th)));
    const Complex s = s_value_41(m0);
    for (const auto& nb : numeric_branches(factor, m0, 128, 5)) {
      for (int sign : {1, -1}) {
        const Complex sv = s * Complex(sign);
        if (abs(evaluate(g.l, m0, sv) - nb.root) > Real("1e-25")) continue;
        ++points;
        for (int k = 1; k <= 4; ++k) {
          const Complex ex = evaluate(g.supplier(k), m0, sv);
          worst = std::max<Real>(worst, abs(nb.spec.supplier(k).value() - ex) / std::max<Real>(Real(1), abs(ex)));
        }
      }
    }
  }
  c.require(points == 10, "matched " + std::to_string(points) + "/10 numeric roots");
  c.require(worst < Real("1e-15"), "exact/numeric max rel diff " + sci(worst));

  // byte-identical JSON
  const std::vector<std::vector<std::string>> cmds = {
      {"expand", "--knot", "4_1", "--branch", "abelian", "--order", "4"},
      {"expand", "--knot", "4_1", "--branch", "geometric", "--order", "3"},
      {"expand", "--knot", "4_1", "--branch", "numeric", "--order", "3"},
      {"fit", "--knot", "4_1", "--u", "0.1", "--dmax", "2"},
      {"growth", "--knot", "4_1", "--nlist", "100,200"},
  };
  int same = 0;
  for (const auto& cmd : cmds) {
    std::ostringstream a, b, e;
    const int ca = run_cli(cmd, a, e), cb = run_cli(cmd, b, e);
    if (ca == 0 && cb == 0 && a.str() == b.str()) ++same;
  }
  c.require(same == static_cast<int>(cmds.size()), "non-deterministic JSON");
  c.note("1000/1000 Leibniz, inverse, round trip; exact/numeric max rel diff " + sci(worst) + " < 1e-15; " +
         std::to_string(same) + " commands byte-identical");
}

}  // namespace

int main() {
  criterion(1, "twist-knot A-polynomials K_1, K_0, K_-1, K_2, K_-2 (exact)", 1, twist_polys);
  criterion(2, "4_1 abelian expansion to order 4 (exact)", 30, abelian41);
  std::string layout;
  criterion(3, "4_1 geometric expansion, sqrt(-R) = i s (exact)", 300,
            [&](Check& c) { geometric41(c, true, layout); });
  {
    // Informational: the same comparison with (-R)^{3/2} read as -R sqrt(R).
    Outcome o;
    Check c{o};
    std::string l2;
    try {
      geometric41(c, false, l2);
    } catch (const std::exception& e) {
      o.status = Outcome::fail;
      c.note(e.what());
    }
    std::cout << "INFO [3] alternative reading (-R)^{3/2} = -R sqrt(R): "
              << (o.status == Outcome::pass ? "all orders match" : "mismatch") << ": " << o.detail << std::endl;
  }
  criterion(4, "5_2 and 6_1 abelian expansions against printed forms (exact)", 300, [](Check& c) {
    twist_expansions(c, c.out);
  });
  criterion(5, "annihilation N0 = 1..17 and AJ divisibility for 4_1 (exact)", 10, annihilation);
  criterion(6, "MMR consistency at u = 0.10, 0.15 (256 bits, N = 50..400)", 300, mmr);
  criterion(7, "Kashaev growth limit vs volume quadrature (N <= 500, tol 1e-2)", 600, growth);
  criterion(8, "property suites, exact/numeric streams (tol 1e-15), deterministic JSON", 300, properties);
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
