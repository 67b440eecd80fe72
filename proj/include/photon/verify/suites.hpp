#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "photon/verify/scenario.hpp"

namespace photon::verify {

// A named number compared against a scenario tolerance: kind Max passes iff value <= tolerance,
// Min iff value >= tolerance, Info is reported only.
struct Metric {
  enum class Kind { Max, Min, Info };
  std::string name;
  double value = 0.0;
  Kind kind = Kind::Info;
  std::string tolerance_key;
  double tolerance = 0.0;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

struct SuiteResult {
  std::string id;
  std::vector<Metric> metrics;
  std::vector<std::string> artifacts;  // file names relative to the output directory
  std::vector<std::string> notes;
  std::string error;                   // convergence failure inside the suite

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

struct SuiteInfo {
  std::string id;
  std::string description;
  std::vector<std::string> tolerance_keys;       // required in the scenario when the suite is requested
  bool supports_grid = false;
  std::vector<std::string> grid_tolerance_keys;  // required instead for grid fields
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& suite_info(const std::string& id);

struct SuiteContext {
  const Scenario& scenario;
  FieldPtr field;
  std::uint64_t seed;
  std::filesystem::path out_dir;
  bool parallel_kernels = true;
};

SuiteResult run_suite(const std::string& id, const SuiteContext& ctx);

}  // namespace photon::verify
