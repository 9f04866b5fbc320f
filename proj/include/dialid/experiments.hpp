#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace dialid {

struct ExperimentOptions {
  bool rational = false;
  int modulus = 101;
  std::uint64_t seed = 12345;
  long trials = 200;
  bool skip_generators = false;  // rank-level reruns (field-agnosticism checks)
};

struct ExperimentCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ExperimentReport {
  std::string experiment;
  int degree = 0;
  std::string field_name;
  long rows = 0, cols = 0;
  long rank = -1, nullity = -1;
  std::vector<std::string> generators;
  std::vector<long> rank_trajectory;
  std::vector<ExperimentCheck> checks;
  double seconds = 0;
  nlohmann::json extra;

  bool ok() const {
    for (const ExperimentCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
  std::string summary() const;
};

std::vector<std::string> experiment_names();
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt);

}  // namespace dialid
