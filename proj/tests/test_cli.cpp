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

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qjones/cli.hpp"

using namespace qjones;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json error_of(const Run& r) { return nlohmann::json::parse(r.err); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("apoly") {
    const Run r = run({"apoly", "--twist", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "l + m^6\n");
    const Run t = run({"apoly", "--torus", "3", "5", "--format", "json"});
    CHECK(t.code == 0);
    const auto j = nlohmann::json::parse(t.out);
    CHECK(j["schema"] == 1);
    CHECK(j["apoly"] == "1 + l*m^15");
    CHECK(run({"apoly", "--torus", "2", "4"}).code == 1);
    CHECK(run({"apoly"}).code == 1);
    CHECK(run({"apoly", "--twist", "1", "--torus", "2", "3"}).code == 1);
  }

  TEST_CASE("expand") {
    const Run u = run({"expand", "--knot", "unknot", "--branch", "abelian", "--order", "3"});
    REQUIRE(u.code == 0);
    const auto j = nlohmann::json::parse(u.out);
    CHECK(j["branch"] == "abelian");
    CHECK(j["delta"] == "0");
    REQUIRE(j["orders"].size() == 3);
    for (const auto& o : j["orders"]) CHECK(o["dS_du"] == "0");

    const Run f = run({"expand", "--knot", "4_1", "--order", "4"});
    REQUIRE(f.code == 0);
    const auto k = nlohmann::json::parse(f.out);
    CHECK(k["orders"][0]["S"]["logs"][0][1] == "1 - 3*m^2 + m^4");
    CHECK(k["orders"][1]["dS_du"] == "0");
    CHECK(k["orders"][3]["dS_du"] == "0");

    const Run g = run({"expand", "--knot", "4_1", "--branch", "geometric", "--order", "2"});
    REQUIRE(g.code == 0);
    CHECK(nlohmann::json::parse(g.out)["delta"] == "3");

    const Run n = run({"expand", "--knot", "4_1", "--branch", "numeric", "--order", "2", "--prec", "128"});
    REQUIRE(n.code == 0);
    const auto nj = nlohmann::json::parse(n.out);
    CHECK(nj["branches"].size() == 3);
    CHECK(nj["branches"][0]["delta"].is_null());
  }

  TEST_CASE("error exits") {
    const Run g = run({"expand", "--knot", "5_2", "--branch", "geometric", "--order", "2"});
    CHECK(g.code == 2);
    CHECK(g.out.empty());
    const auto e = error_of(g);
    CHECK(e["schema"] == 1);
    CHECK(e["error"]["kind"] == "computation");
    CHECK(e["error"]["message"] == "exact geometric branch unsupported; use --branch numeric");

    const Run missing = run({"expand", "--knot", "5_2"});
    CHECK(missing.code == 1);
    CHECK(error_of(missing)["error"]["kind"] == "validation");

    CHECK(run({"expand", "--knot", "4_1", "--bogus"}).code == 1);
    CHECK(run({"expand", "--knot", "4_1", "--branch", "sideways"}).code == 1);
    CHECK(run({"expand", "--knot", "4_1", "--order", "0"}).code == 1);
    CHECK(run({"expand", "--knot", "4_1", "--branch", "numeric", "--m0", "zebra"}).code == 1);
    CHECK(run({"expand", "--knot", "4_1", "--branch", "numeric", "--prec", "32"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"growth", "--knot", "4_1", "--nlist", "10,x"}).code == 1);
  }

  TEST_CASE("help") {
    const Run top = run({"--help"});
    CHECK(top.code == 0);
    for (const char* sc : {"apoly", "expand", "verify", "fit", "mmr", "growth"}) CHECK(top.out.find(sc) != std::string::npos);
    const std::vector<std::pair<std::string, std::vector<std::string>>> flags = {
        {"apoly", {"--twist", "--torus", "--format"}},
        {"expand", {"--knot", "--branch", "--order", "--m0", "--prec", "--operator", "--init", "--format"}},
        {"verify", {"--knot", "--nmax"}},
        {"fit", {"--knot", "--u", "--dmax", "--nmin", "--nmax", "--nstep", "--prec"}},
        {"mmr", {"--knot", "--dmax", "--u"}},
        {"growth", {"--knot", "--nlist", "--prec"}},
    };
    for (const auto& [sc, fl] : flags) {
      const Run h = run({sc, "--help"});
      CHECK(h.code == 0);
      for (const auto& f : fl) CHECK_MESSAGE(h.out.find(f) != std::string::npos, sc << " " << f);
    }
  }

  TEST_CASE("verify") {
    const Run v = run({"verify", "--knot", "4_1", "--nmax", "17"});
    REQUIRE(v.code == 0);
    const auto j = nlohmann::json::parse(v.out);
    CHECK(j["annihilation"]["all_zero"] == true);
    CHECK(j["aj"]["divisible_by_l_minus_1_times_classical"] == true);
    CHECK(j["sequence"] == "multisum");
    const Run u = run({"verify", "--knot", "unknot", "--nmax", "5"});
    CHECK(u.code == 0);
  }

  TEST_CASE("numeric subcommands") {
    const Run f = run({"fit", "--knot", "4_1", "--u", "0.1", "--dmax", "1", "--nmin", "50", "--nmax", "200"});
    REQUIRE(f.code == 0);
    const auto j = nlohmann::json::parse(f.out);
    CHECK(j["C"].size() == 2);
    CHECK(j["N_min"] == 50);
    CHECK(j.contains("extrapolation"));

    const Run m = run({"mmr", "--knot", "4_1", "--dmax", "2"});
    REQUIRE(m.code == 0);
    const auto mj = nlohmann::json::parse(m.out);
    CHECK(mj["C"].size() == 3);
    CHECK(std::stod(mj["C"][2]["rel_diff"].get<std::string>()) < 1e-3);

    const Run g = run({"growth", "--knot", "4_1", "--nlist", "50,100"});
    REQUIRE(g.code == 0);
    CHECK(nlohmann::json::parse(g.out)["rows"].size() == 2);
  }

  TEST_CASE("deterministic output") {
    const std::vector<std::vector<std::string>> cmds = {
        {"expand", "--knot", "4_1", "--order", "3"},
        {"expand", "--knot", "4_1", "--branch", "geometric", "--order", "2"},
        {"expand", "--knot", "4_1", "--branch", "numeric", "--order", "2", "--prec", "128"},
        {"fit", "--knot", "4_1", "--dmax", "1", "--nmax", "250"},
        {"verify", "--knot", "4_1", "--nmax", "5"},
    };
    for (const auto& c : cmds) {
      const Run a = run(c), b = run(c);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }
}
