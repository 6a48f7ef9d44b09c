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

#include "qjones/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qjones/jones.hpp"

#ifndef QJONES_DEFAULT_DATA_DIR
#define QJONES_DEFAULT_DATA_DIR "data"
#endif

namespace qjones {

namespace {

BiPoly lm(const std::string& s) { return parse_bipoly(s, 'l', 'm'); }

}  // namespace

BiPoly twist_apoly(int p) {
  const BiPoly c = lm("-l + l^2 + 2*l*m^2 + m^4 + 2*l*m^4 + l^2*m^4 + 2*l*m^6 + m^8 - l*m^8");
  const BiPoly d = lm("m^4") * pow(lm("l + m^2"), 4);
  const BiPoly a0 = lm("1");
  const BiPoly a1 = lm("l + m^6");
  const BiPoly a2 = lm("-l^2 + l^3 + 2*l^2*m^2 + l*m^4 + 2*l^2*m^4 - l*m^6 - l^2*m^8 + 2*l*m^10 + l^2*m^10 + "
                       "2*l*m^12 + m^14 - l*m^14");
  const BiPoly am1 = lm("-l + l*m^2 + m^4 + 2*l*m^4 + l^2*m^4 + l*m^6 - l*m^8");
  if (p == 0) return a0;
  BiPoly prev, cur;  // A_{p-2}, A_{p-1} going up; A_{p+2}, A_{p+1} going down
  if (p > 0) {
    if (p == 1) return a1.unit_normalized();
    prev = a1;
    cur = a2;
    for (int k = 3; k <= p; ++k) {
      BiPoly next = c * cur - d * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  } else {
    prev = a0;
    cur = am1;
    for (int k = -2; k >= p; --k) {
      BiPoly next = c * cur - d * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return cur.unit_normalized();
}

BiPoly torus_apoly(int p, int q) {
  if (std::abs(p) < 2 || std::abs(q) < 2) throw ValidationError("torus knot indices need |p|, |q| >= 2");
  if (std::gcd(p, q) != 1) throw ValidationError("torus knot indices must be coprime");
  BiPoly r = BiPoly(Integer(1), 'l', 'm') + BiPoly::monomial(1, 1, p * q, 'l', 'm');
  return r;
}

std::optional<int> twist_index(const std::string& name) {
  if (name == "3_1") return 1;
  if (name == "4_1") return -1;
  if (name == "5_2") return 2;
  if (name == "6_1") return -2;
  if (name == "7_2") return 3;
  if (name == "8_1") return -3;
  if (name.rfind("K_", 0) == 0) {
    try {
      std::size_t used = 0;
      const int p = std::stoi(name.substr(2), &used);
      if (used == name.size() - 2 && p != 0) return p;
    } catch (const std::logic_error&) {
    }
  }
  return std::nullopt;
}

LaurentPoly<Rational> alexander(const std::string& name) {
  using P = LaurentPoly<Rational>;
  if (name == "unknot") return P(1, Var::t);
  const auto p = twist_index(name);
  if (!p) throw ValidationError("unknown knot: " + name);
  // p > 0: p t^-1 + (1 - 2p) + p t;  p < 0: |p| t^-1 - (2|p| + 1) + |p| t.
  const int a = std::abs(*p);
  const int c0 = *p > 0 ? 1 - 2 * a : -(2 * a + 1);
  return P::from_terms({{-1, a}, {0, c0}, {1, a}}, Var::t);
}

std::string data_dir() {
  if (const char* env = std::getenv("QJONES_DATA_DIR"); env && *env) return env;
  return QJONES_DEFAULT_DATA_DIR;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open manifest: " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<ManifestEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 3 || tok.size() > 4) throw ValidationError(path + ": " + ParseError(lineno, "expected '<name> <operator-file> <degree> [initial-values-file]'").what());
    ManifestEntry e;
    e.name = tok[0];
    const auto resolve = [&](const std::string& p) {
      const std::filesystem::path fp(p);
      return (fp.is_absolute() ? fp : base / fp).string();
    };
    e.operator_file = resolve(tok[1]);
    try {
      e.degree = std::stoi(tok[2]);
    } catch (const std::logic_error&) {
      throw ValidationError(path + ": " + ParseError(lineno, "bad degree '" + tok[2] + "'").what());
    }
    if (tok.size() == 4) e.initial_file = resolve(tok[3]);
    out.push_back(std::move(e));
  }
  return out;
}

QSequence load_initial_values(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open initial values: " + path);
  QSequence J;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok.size() != 4 || tok[0] != "coeff") throw std::invalid_argument("shape");
      const int N = std::stoi(tok[1]);
      const int e = std::stoi(tok[3]);
      if (N < 1) throw std::invalid_argument("N");
      if (static_cast<int>(J.size()) < N) J.resize(static_cast<std::size_t>(N), LaurentPoly<Rational>(Var::q));
      J[static_cast<std::size_t>(N - 1)] += LaurentPoly<Rational>::monomial(Rational(Integer(tok[2])), e, Var::q);
    } catch (const std::exception&) {
      throw ValidationError(path + ": " + ParseError(lineno, "expected 'coeff <N> <c> <e>'").what());
    }
  }
  return J;
}

KnotRecord knot_record(const std::string& name, const std::optional<std::string>& operator_path,
                       const std::optional<std::string>& initial_path) {
  KnotRecord r;
  r.name = name;
  const auto tw = twist_index(name);
  if (name == "unknot") {
    r.apoly = lm("1");
    r.alexander = alexander(name);
    r.op = unknot_operator();
    r.operator_source = "builtin";
    r.initial = QSequence{LaurentPoly<Rational>(1, Var::q)};
    r.has_multisum = true;
  } else if (tw) {
    r.apoly = twist_apoly(*tw);
    r.alexander = alexander(name);
  } else if (!operator_path) {
    throw ValidationError("unknown knot '" + name + "' (supply an operator file)");
  }
  if (name == "4_1" && !operator_path) {
    r.op = builtin_operator_41();
    r.operator_source = "builtin";
    r.has_multisum = true;
    r.initial = QSequence{jones_41(1), jones_41(2), jones_41(3)};
  }
  std::optional<std::string> op_file = operator_path, init_file = initial_path;
  if (!r.op && !op_file) {
    const std::string manifest = (std::filesystem::path(data_dir()) / "manifest.txt").string();
    if (std::filesystem::exists(manifest)) {
      for (const auto& e : load_manifest(manifest)) {
        if (e.name != name) continue;
        op_file = e.operator_file;
        if (!init_file && !e.initial_file.empty()) init_file = e.initial_file;
        QDiffOperator A = load_operator(e.operator_file);
        if (normalize_operator(A).degree() != e.degree)
          throw ValidationError("operator file " + e.operator_file + " has degree " +
                                std::to_string(normalize_operator(A).degree()) + ", manifest says " +
                                std::to_string(e.degree));
      }
    }
    if (!op_file)
      throw ValidationError("no operator available for '" + name +
                            "': pass an operator file or add it to the manifest in " + data_dir());
  }
  if (op_file) {
    r.op = normalize_operator(load_operator(*op_file));
    r.operator_source = *op_file;
    if (name == "4_1") {
      r.has_multisum = true;
      r.initial = QSequence{jones_41(1), jones_41(2), jones_41(3)};
    }
  }
  if (init_file) r.initial = load_initial_values(*init_file);
  if (r.op && r.apoly) {
    const BiPoly target = (lm("l - 1") * *r.apoly);
    r.aj_consistent = divide_exact(specialize_q1(*r.op), target).has_value();
  }
  return r;
}

}  // namespace qjones
