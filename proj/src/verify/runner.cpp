#include "photon/verify/runner.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <spdlog/spdlog.h>

#include "photon/verify/scenario.hpp"

namespace photon::verify {

using nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite_id) {
  // FNV-1a of the id, mixed with the run seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : suite_id) h = (h ^ ch) * 0x100000001b3ULL;
  std::uint64_t state = seed ^ h;
  return splitmix64(state);
}

namespace {

void configure_logging() {
  const char* env = std::getenv("VERIFY_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
  spdlog::set_pattern("[%l] %v");
}

}  // namespace

int run(const RunOptions& opts) {
  configure_logging();
  Scenario sc;
  try {
    sc = load_scenario(opts.scenario_path);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    namespace fs = std::filesystem;
    const fs::path out = opts.out_dir;
    fs::create_directories(out);
    const FieldPtr field = build_field(sc.field, sc.constants, true);

    auto one = [&](const std::string& id) {
      const SuiteContext ctx{sc, field, suite_seed(opts.seed, id), out, true};
      return run_suite(id, ctx);
    };
    std::vector<SuiteResult> results;
    if (opts.parallel) {
      std::vector<std::future<SuiteResult>> jobs;
      for (const auto& id : sc.suites) jobs.push_back(std::async(std::launch::async, one, id));
      for (auto& j : jobs) results.push_back(j.get());
    } else {
      for (const auto& id : sc.suites) results.push_back(one(id));
    }

    bool all = true;
    ordered_json report;
    report["schema"] = kScenarioSchema;
    report["scenario"] = sc.name;
    report["seed"] = opts.seed;
    report["field"] = sc.field.describe();
    ordered_json suites = ordered_json::array();
    for (const auto& r : results) {
      all = all && r.passed();
      suites.push_back(r.to_json());
    }
    report["suites"] = suites;
    report["passed"] = all;
    std::ofstream f(out / "report.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (out / "report.json").string());
    f << report.dump(2) << "\n";

    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << "\n";
      if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
      for (const auto& m : r.metrics)
        if (!m.passed())
          std::cout << "  failing metric " << m.name << " = " << m.value << " (" << m.tolerance_key << " "
                    << (m.kind == Metric::Kind::Min ? ">= " : "<= ") << m.tolerance << ")\n";
    }
    return all ? kPass : kFail;
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

std::string list_suites_text() {
  std::string s;
  for (const auto& r : suite_registry()) s += r.id + "  " + r.description + "\n";
  return s;
}

std::string list_suites_json() {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : suite_registry()) j.push_back(r.id);
  return j.dump() + "\n";
}

std::string csv_documentation() {
  return R"(CSV artifacts (all numbers %.17g):
  cauchy.csv            n,spacing,dt,steps,error_l2,reference_l2,relative
  charges.csv           slice charges; header from the charge report (t then one column per charge)
  drift.csv             charge,q0,q1,flux,source,scale,drift,balance
  grid_charges.csv      charge,q0,q1,l1,bound
  boundary_samples.csv  t,radius,re_mu,im_mu,re_f1,im_f1,re_f2,im_f2,re_f3,im_f3
  boundary_limits.csv   t,re_mu,im_mu,re_f1,im_f1,re_f2,im_f2,re_f3,im_f3,error
  gauge.csv             case,delta_mu,delta_f1,delta_f2,delta_f3,error_estimate
)";
}

}  // namespace photon::verify
