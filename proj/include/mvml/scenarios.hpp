#pragma once

#include <string>
#include <vector>

namespace mvml {

struct ScenarioInfo {
  std::string id;
  std::string description;
};

struct ScenarioResult {
  std::string id;
  bool passed = false;
  std::string transcript;  // one line per check, expected vs actual
};

// Reproduction scenarios in their canonical order.
const std::vector<ScenarioInfo>& scenario_list();

// Throws BadParam for an unknown id.
ScenarioResult run_scenario(const std::string& id, unsigned jobs = 1);

}  // namespace mvml
