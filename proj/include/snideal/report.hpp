// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace snideal {

// Reports keep insertion order so identical runs serialize byte-identically.
using ojson = nlohmann::ordered_json;

enum class Verdict { pass, fail, exploratory };

std::string to_string(Verdict v);

struct CampaignSpec {
  std::string name;
  ojson params = ojson::object();
  std::uint64_t seed = 0;
};

struct CampaignCase {
  ojson inputs = ojson::object();
  ojson values = ojson::object();
  bool pass = true;
};

struct CampaignReport {
  CampaignSpec spec;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  Verdict verdict = Verdict::pass;
  std::vector<CampaignCase> cases;
  std::vector<ojson> witnesses;
  ojson tolerances = ojson::object();
  double wall_ms = 0.0; // envelope data, excluded from the diffable payload

  ojson to_json(bool include_timing = false) const;
};

} // namespace snideal
