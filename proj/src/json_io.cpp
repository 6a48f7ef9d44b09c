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

#include "qjones/json_io.hpp"

namespace qjones {

std::string decimal(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

Json to_json(const Complex& z, int digits) {
  Json j;
  j["re"] = decimal(z.real(), digits);
  j["im"] = decimal(z.imag(), digits);
  return j;
}

Json to_json(const LogCombination& F) {
  Json j;
  j["rational"] = to_string(F.rational);
  Json logs = Json::array();
  for (const auto& t : F.logs) logs.push_back(Json::array({t.coeff.str(), to_string(t.argument)}));
  j["logs"] = logs;
  j["u_coeff"] = F.u_coeff.str();
  return j;
}

Json to_json(const FitReport& r) {
  Json j;
  j["schema"] = 1;
  j["u"] = to_json(r.u);
  j["N_min"] = r.options.N_min;
  j["N_max"] = r.options.N_max;
  j["N_step"] = r.options.N_step;
  j["prec"] = r.options.prec;
  Json cs = Json::array();
  for (const auto& c : r.C) {
    Json e;
    e["d"] = c.d;
    e["re"] = decimal(c.value.real());
    e["im"] = decimal(c.value.imag());
    e["err"] = decimal(c.error, 6);
    cs.push_back(e);
  }
  j["C"] = cs;
  Json ex;
  ex["basis_terms"] = r.C.size() + static_cast<std::size_t>(std::max(r.options.extra_terms, 0));
  ex["condition"] = r.condition;
  Json ws = Json::array();
  for (const auto& w : r.windows) {
    Json e;
    e["N_lo"] = w.N_lo;
    e["N_hi"] = w.N_hi;
    Json c = Json::array();
    for (std::size_t d = 0; d < r.C.size() && d < w.C.size(); ++d) c.push_back(to_json(w.C[d], 15));
    e["C"] = c;
    ws.push_back(e);
  }
  ex["windows"] = ws;
  j["extrapolation"] = ex;
  return j;
}

Json to_json(const GrowthReport& r) {
  Json j;
  j["schema"] = 1;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["N"] = row.N;
    e["estimate"] = decimal(row.estimate, 20);
    rows.push_back(e);
  }
  j["rows"] = rows;
  j["limit"] = r.limit;
  j["error"] = r.error;
  return j;
}

}  // namespace qjones
