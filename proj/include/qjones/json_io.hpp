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

#include "json.hpp"

#include "qjones/catalog.hpp"
#include "qjones/expansion.hpp"
#include "qjones/fit.hpp"
#include "qjones/format.hpp"
#include "qjones/jones.hpp"

namespace qjones {

using Json = nlohmann::ordered_json;

/// Significant digits used for arbitrary-precision numbers in JSON.
inline constexpr int kJsonDigits = 30;

std::string decimal(const Real& x, int digits = kJsonDigits);
Json to_json(const Complex& z, int digits = kJsonDigits);
Json to_json(const LogCombination& F);

template <class F>
Json order_json(const OrderResult<F>& o) {
  Json j;
  j["n"] = o.n;
  j["dS_du"] = to_string(o.dS);
  if (o.S)
    j["S"] = to_json(*o.S);
  else
    j["S"] = nullptr;
  if (o.delta_power) j["delta_power"] = *o.delta_power;
  if (o.torsion_shape) j["torsion_shape"] = *o.torsion_shape;
  return j;
}

template <class F>
Json to_json(const ExpansionResult<F>& r) {
  Json j;
  j["schema"] = 1;
  j["knot"] = r.knot;
  j["branch"] = to_string(r.kind);
  if (r.delta)
    j["delta"] = r.delta->str();
  else
    j["delta"] = nullptr;
  Json orders = Json::array();
  for (const auto& o : r.orders) orders.push_back(order_json(o));
  j["orders"] = orders;
  j["constants"] = "integration constants are reported as 0";
  return j;
}

Json to_json(const FitReport& r);
Json to_json(const GrowthReport& r);

}  // namespace qjones
