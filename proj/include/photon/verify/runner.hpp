#pragma once

#include <cstdint>
#include <string>

#include "photon/verify/suites.hpp"

namespace photon::verify {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

// SplitMix64 step and the per-suite sub-seed derived from the run seed and the suite id.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite_id);

struct RunOptions {
  std::string scenario_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool parallel = false;  // run suites concurrently
};

// Loads, runs and reports; returns an ExitCode.
int run(const RunOptions& opts);

// Registry listing as text (one id per line with a description) or as a JSON array of ids.
std::string list_suites_text();
std::string list_suites_json();

// Column documentation of every CSV artifact.
std::string csv_documentation();

}  // namespace photon::verify
