// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#include "snideal/report.hpp"

namespace snideal {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::exploratory: return "exploratory";
  }
  return "?";
}

ojson CampaignReport::to_json(bool include_timing) const {
  ojson j;
  j["campaign"] = spec.name;
  j["seed"] = spec.seed;
  j["params"] = spec.params;
  j["verdict"] = to_string(verdict);
  j["cases_run"] = cases_run;
  j["cases_passed"] = cases_passed;
  ojson cs = ojson::array();
  for (const auto& c : cases)
    cs.push_back({{"inputs", c.inputs}, {"values", c.values}, {"pass", c.pass}});
  j["cases"] = cs;
  j["witnesses"] = witnesses;
  j["tolerances"] = tolerances;
  if (include_timing) j["envelope"] = {{"wall_ms", wall_ms}};
  return j;
}

} // namespace snideal
