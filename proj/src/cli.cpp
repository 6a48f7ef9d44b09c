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

#include "qjones/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qjones/json_io.hpp"

namespace qjones {

namespace {

struct KnotOptions {
  std::string knot;
  std::string operator_file;
  std::string init_file;

  void add(CLI::App* app, bool required = true) {
    auto* o = app->add_option("--knot", knot, "Knot name: unknot, 3_1, 4_1, 5_2, 6_1, K_<p>, or the name for --operator");
    if (required) o->required();
    app->add_option("--operator", operator_file, "Operator file (term lines 'term c a b j')");
    app->add_option("--init", init_file, "Initial values file (lines 'coeff N c e')");
  }

  KnotRecord load() const {
    return knot_record(knot, operator_file.empty() ? std::nullopt : std::optional(operator_file),
                       init_file.empty() ? std::nullopt : std::optional(init_file));
  }
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int error_json(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  Json j;
  j["schema"] = 1;
  j["error"] = {{"kind", kind}, {"message", message}};
  err << j.dump() << "\n";
  return code;
}

Complex eval_presentation(const LogCombination& F, const Complex& u) {
  const Complex m = exp(u);
  Complex v = evaluate(F.rational, m) + to_complex(F.u_coeff) * u;
  for (const auto& t : F.logs) v += to_complex(t.coeff) * log(evaluate(RationalFunction<Rational>(t.argument), m));
  return v;
}

const QDiffOperator& need_operator(const KnotRecord& r) {
  if (!r.op) throw ValidationError("knot '" + r.name + "' has no operator");
  return *r.op;
}

std::string branch_text(const std::string& b) {
  if (b != "abelian" && b != "geometric" && b != "numeric")
    throw ValidationError("--branch must be abelian, geometric or numeric");
  return b;
}

template <class F>
void expand_text(std::ostream& out, const ExpansionResult<F>& r) {
  out << "knot " << r.knot << ", branch " << to_string(r.kind) << ", delta "
      << (r.delta ? r.delta->str() : std::string("unknown")) << "\n";
  for (const auto& o : r.orders) {
    out << "S_" << o.n << "' = " << to_string(o.dS) << "\n";
    if (o.S) out << "S_" << o.n << " = " << to_string(*o.S) << "\n";
    if (o.delta_power) out << "  denominator Delta(m^2)^" << *o.delta_power << "\n";
    if (o.torsion_shape) out << "  torsion shape " << (*o.torsion_shape ? "holds" : "fails") << "\n";
  }
}

int cmd_apoly(std::optional<int> twist, const std::vector<int>& torus, const std::string& format, std::ostream& out) {
  if (twist.has_value() == !torus.empty()) throw ValidationError("apoly needs exactly one of --twist or --torus");
  BiPoly a = twist ? twist_apoly(*twist) : torus_apoly(torus[0], torus[1]);
  if (format == "json") {
    Json j;
    j["schema"] = 1;
    if (twist) {
      j["family"] = "twist";
      j["p"] = *twist;
    } else {
      j["family"] = "torus";
      j["p"] = torus[0];
      j["q"] = torus[1];
    }
    j["apoly"] = to_string(a);
    emit(out, j);
  } else {
    out << to_string(a) << "\n";
  }
  return 0;
}

int cmd_expand(const KnotOptions& ko, const std::string& branch, int order, const std::string& m0s, unsigned prec,
               const std::string& format, std::ostream& out) {
  if (order < 1) throw ValidationError("--order must be >= 1");
  if (branch == "geometric" && ko.knot != "4_1")
    throw Unsupported("exact geometric branch unsupported; use --branch numeric");
  const KnotRecord rec = ko.load();
  const QDiffOperator& A = need_operator(rec);
  if (branch == "abelian") {
    auto r = expand_exact(rec.name, A, abelian_branch(), order);
    observe(r, rec.alexander);
    if (format == "text")
      expand_text(out, r);
    else
      emit(out, to_json(r));
    return 0;
  }
  if (branch == "geometric") {
    auto r = expand_exact(rec.name, A, geometric_branch_41(), order);
    observe(r);
    if (format == "text")
      expand_text(out, r);
    else
      emit(out, to_json(r));
    return 0;
  }
  if (prec < 64) throw ValidationError("--prec must be >= 64");
  PrecisionGuard guard(prec);
  const Complex m0 = parse_complex(m0s);
  if (m0 == Complex(0)) throw ValidationError("--m0 must be nonzero");
  const auto branches = numeric_branches(specialize_q1(A), m0, prec, order + 1);
  Json j;
  j["schema"] = 1;
  j["knot"] = rec.name;
  j["branch"] = "numeric";
  j["m0"] = to_json(m0);
  j["prec"] = prec;
  Json bs = Json::array();
  const Real tol = pow(Real(10), 1 - static_cast<int>(prec) / 4);
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& b = branches[i];
    Json e;
    e["index"] = i;
    e["root"] = to_json(b.root);
    e["multiplicity"] = b.multiplicity;
    e["residual"] = decimal(b.residual, 6);
    e["expandable"] = b.expandable;
    e["delta"] = nullptr;
    Json orders = Json::array();
    if (b.expandable) {
      const auto r = expand(rec.name, A, b.spec, order, [&](const Series& s) {
        Real scale(1);
        return abs(s.value()) < tol * scale;
      });
      for (const auto& o : r.orders) orders.push_back({{"n", o.n}, {"dS_du", to_json(o.dS.value())}});
    }
    e["orders"] = orders;
    bs.push_back(e);
  }
  j["branches"] = bs;
  if (format == "text") {
    for (const auto& e : bs) {
      out << "root " << e["index"].get<std::size_t>() << ": " << e["root"]["re"].get<std::string>() << " + "
          << e["root"]["im"].get<std::string>() << "*i" << (e["expandable"].get<bool>() ? "" : " (not expandable)")
          << "\n";
      for (const auto& o : e["orders"])
        out << "  S_" << o["n"].get<int>() << "' = " << o["dS_du"]["re"].get<std::string>() << " + "
            << o["dS_du"]["im"].get<std::string>() << "*i\n";
    }
  } else {
    emit(out, j);
  }
  return 0;
}

int cmd_verify(const KnotOptions& ko, int nmax, const std::string& format, std::ostream& out) {
  if (nmax < 1) throw ValidationError("--nmax must be >= 1");
  const KnotRecord rec = ko.load();
  const QDiffOperator& A = need_operator(rec);
  const int d = A.degree();
  QSequence J;
  std::string source;
  if (rec.has_multisum && rec.name != "unknot") {
    for (int N = 1; N <= nmax + d; ++N) J.push_back(jones_41(N));
    source = "multisum";
  } else {
    if (!rec.initial) throw ValidationError("knot '" + rec.name + "' has no initial values (use --init)");
    J = jones_from_recursion(rec, *rec.initial, nmax + d).values;
    source = "recursion";
  }
  Json fails = Json::array();
  for (int N0 = 1; N0 <= nmax; ++N0)
    if (!apply_operator(A, J, N0).is_zero()) fails.push_back(N0);
  Json j;
  j["schema"] = 1;
  j["knot"] = rec.name;
  j["operator"] = rec.operator_source;
  j["degree"] = d;
  j["sequence"] = source;
  j["annihilation"] = {{"N0_min", 1}, {"N0_max", nmax}, {"all_zero", fails.empty()}, {"failures", fails}};
  const BiPoly spec = specialize_q1(A);
  Json aj;
  aj["specialization"] = to_string(spec);
  if (rec.apoly) {
    aj["classical"] = to_string(*rec.apoly);
    aj["divisible_by_l_minus_1_times_classical"] = rec.aj_consistent.value_or(false);
  } else {
    aj["classical"] = nullptr;
    aj["divisible_by_l_minus_1_times_classical"] = nullptr;
  }
  j["aj"] = aj;
  const bool ok = fails.empty() && rec.aj_consistent.value_or(true);
  j["ok"] = ok;
  if (format == "text") {
    out << "annihilation N0=1.." << nmax << ": " << (fails.empty() ? "zero" : "NONZERO") << "\n";
    out << "specialization: " << to_string(spec) << "\n";
    if (rec.aj_consistent) out << "AJ divisibility: " << (*rec.aj_consistent ? "yes" : "no") << "\n";
  } else {
    emit(out, j);
  }
  return ok ? 0 : 2;
}

struct FitFlags {
  std::string u = "0.1";
  int dmax = 3;
  FitOptions opt;
};

void add_fit_flags(CLI::App* app, FitFlags& f, int default_dmax) {
  f.dmax = default_dmax;
  app->add_option("--u", f.u, "Expansion point u (complex, e.g. 0.1 or 0.1+0.05i)")->capture_default_str();
  app->add_option("--dmax", f.dmax, "Highest reported coefficient C_d")->capture_default_str();
  app->add_option("--nmin", f.opt.N_min, "Smallest N")->capture_default_str();
  app->add_option("--nmax", f.opt.N_max, "Largest N")->capture_default_str();
  app->add_option("--nstep", f.opt.N_step, "Step in N")->capture_default_str();
  app->add_option("--prec", f.opt.prec, "Working precision in bits")->capture_default_str();
  app->add_option("--extra", f.opt.extra_terms, "Basis terms beyond dmax in the fit")->capture_default_str();
}

int cmd_fit(const KnotOptions& ko, const FitFlags& f, std::ostream& out) {
  if (f.opt.prec < 64) throw ValidationError("--prec must be >= 64");
  const KnotRecord rec = ko.load();
  PrecisionGuard guard(f.opt.prec);
  const FitReport r = fit_series(rec, parse_complex(f.u), f.dmax, f.opt);
  Json j = to_json(r);
  j["knot"] = rec.name;
  emit(out, j);
  return 0;
}

int cmd_mmr(const KnotOptions& ko, const FitFlags& f, std::ostream& out) {
  if (f.dmax < 0) throw ValidationError("--dmax must be >= 0");
  if (f.opt.prec < 64) throw ValidationError("--prec must be >= 64");
  const KnotRecord rec = ko.load();
  const QDiffOperator& A = need_operator(rec);
  const auto ex = expand_exact(rec.name, A, abelian_branch(), f.dmax + 1);
  PrecisionGuard guard(f.opt.prec);
  const Complex u = parse_complex(f.u);
  const FitReport fit = fit_series(rec, u, f.dmax, f.opt);
  // exp(S_1) is fixed up to a constant factor; C_0 = 1 at u = 0 pins it.
  const LogCombination& S1 = *ex.orders[0].S;
  const Complex norm = exp(-eval_presentation(S1, Complex(0)));
  const Complex eS1 = exp(eval_presentation(S1, u)) * norm;
  std::vector<Complex> S;  // S_2, S_3, ...
  std::vector<bool> calibrated;
  Json js = Json::array(), jc = Json::array();
  for (int d = 0; d <= f.dmax; ++d) {
    if (d >= 1) {
      const auto& o = ex.orders[static_cast<std::size_t>(d)];
      if (o.dS.is_zero()) {
        // S_{d+1} is a pure constant: solve C_d(fit) for it.
        S.push_back(Complex(0));
        const Complex rest = mmr_cd(eS1, S, d);
        S.back() = (fit.C[static_cast<std::size_t>(d)].value - rest) / eS1;
        calibrated.push_back(true);
      } else {
        S.push_back(eval_presentation(*o.S, u));
        calibrated.push_back(false);
      }
      js.push_back({{"n", d + 1}, {"value", to_json(S.back(), 20)}, {"calibrated", calibrated.back()}});
    }
    const Complex pred = mmr_cd(eS1, S, d);
    const auto& c = fit.C[static_cast<std::size_t>(d)];
    const Real rel = abs(pred - c.value) / std::max<Real>(abs(c.value), Real(1e-30));
    Json e;
    e["d"] = d;
    e["predicted"] = to_json(pred, 20);
    e["fitted"] = to_json(c.value, 20);
    e["fit_err"] = decimal(c.error, 6);
    e["rel_diff"] = decimal(rel, 6);
    e["calibrated"] = d >= 1 && calibrated[static_cast<std::size_t>(d - 1)];
    jc.push_back(e);
  }
  Json j;
  j["schema"] = 1;
  j["knot"] = rec.name;
  j["u"] = to_json(u);
  j["exp_S1"] = to_json(eS1, 20);
  j["S"] = js;
  j["C"] = jc;
  j["note"] = "constants of S_n with S_n' = 0 are calibrated from the fit; other constants are 0";
  emit(out, j);
  return 0;
}

std::vector<int> parse_nlist(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("--nlist: bad entry '" + item + "'");
    }
  }
  return out;
}

int cmd_growth(const KnotOptions& ko, const std::string& nlist, unsigned prec, std::ostream& out) {
  if (prec < 64) throw ValidationError("--prec must be >= 64");
  const KnotRecord rec = ko.load();
  const GrowthReport g = kashaev_growth(rec, parse_nlist(nlist), prec);
  Json j = to_json(g);
  j["knot"] = rec.name;
  if (rec.name == "4_1") j["volume_oracle"] = volume_41();
  emit(out, j);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic expansions of colored Jones polynomials", "qjones"};
  app.require_subcommand(1);

  auto* apoly = app.add_subcommand("apoly", "Classical A-polynomial of a twist or torus knot");
  std::optional<int> twist;
  std::vector<int> torus;
  apoly->add_option("--twist", twist, "Twist index p (K_1 = 3_1, K_-1 = 4_1)");
  apoly->add_option("--torus", torus, "Torus knot indices p q")->expected(2);
  std::string apoly_format = "text";
  apoly->add_option("--format", apoly_format, "Output format: text or json")->check(CLI::IsMember({"json", "text"}));

  KnotOptions expand_knot, verify_knot, fit_knot, mmr_knot, growth_knot;
  auto* expand_cmd = app.add_subcommand("expand", "Compute S_n'(u) along a branch");
  expand_knot.add(expand_cmd);
  std::string branch = "abelian", m0 = "0.9+0.1i";
  int order = 4;
  unsigned prec = 256;
  expand_cmd->add_option("--branch", branch, "abelian, geometric (4_1 only) or numeric")->capture_default_str();
  expand_cmd->add_option("--order", order, "Highest n")->capture_default_str();
  expand_cmd->add_option("--m0", m0, "Sample point m0 = e^u0 for numeric branches")->capture_default_str();
  expand_cmd->add_option("--prec", prec, "Working precision in bits (numeric)")->capture_default_str();
  std::string expand_format = "json";
  expand_cmd->add_option("--format", expand_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check annihilation of J_N and the AJ specialization");
  verify_knot.add(verify_cmd);
  int verify_nmax = 17;
  verify_cmd->add_option("--nmax", verify_nmax, "Largest start index N0")->capture_default_str();
  std::string verify_format = "json";
  verify_cmd->add_option("--format", verify_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* fit_cmd = app.add_subcommand("fit", "Fit J_N(e^{2u/N}) by sum_d C_d (u/N)^d");
  fit_knot.add(fit_cmd);
  FitFlags fit_flags;
  add_fit_flags(fit_cmd, fit_flags, 3);

  auto* mmr_cmd = app.add_subcommand("mmr", "Compare the partition formula for C_d with the numeric fit");
  mmr_knot.add(mmr_cmd);
  FitFlags mmr_flags;
  add_fit_flags(mmr_cmd, mmr_flags, 2);

  auto* growth_cmd = app.add_subcommand("growth", "Growth of |J_N(e^{2 pi i/N})|");
  growth_knot.add(growth_cmd);
  std::string nlist = "100,150,200,250,300,350,400,450,500";
  unsigned growth_prec = 256;
  growth_cmd->add_option("--nlist", nlist, "Comma-separated ascending N values")->capture_default_str();
  growth_cmd->add_option("--prec", growth_prec, "Working precision in bits")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    bool printed = false;
    for (auto* sc : app.get_subcommands()) {
      out << sc->help();
      printed = true;
    }
    if (!printed) out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return error_json(err, "validation", e.what(), 1);
  }

  try {
    if (apoly->parsed()) return cmd_apoly(twist, torus, apoly_format, out);
    if (expand_cmd->parsed())
      return cmd_expand(expand_knot, branch_text(branch), order, m0, prec, expand_format, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_knot, verify_nmax, verify_format, out);
    if (fit_cmd->parsed()) return cmd_fit(fit_knot, fit_flags, out);
    if (mmr_cmd->parsed()) return cmd_mmr(mmr_knot, mmr_flags, out);
    if (growth_cmd->parsed()) return cmd_growth(growth_knot, nlist, growth_prec, out);
  } catch (const ValidationError& e) {
    return error_json(err, "validation", e.what(), 1);
  } catch (const ComputationError& e) {
    return error_json(err, "computation", e.what(), 2);
  } catch (const std::exception& e) {
    return error_json(err, "computation", e.what(), 2);
  }
  return error_json(err, "validation", "no subcommand", 1);
}

}  // namespace qjones
