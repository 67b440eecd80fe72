#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "photon/verify/runner.hpp"
#include "photon/verify/scenario.hpp"

using namespace photon;
using namespace photon::verify;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kScenarios = SCENARIO_DIR;

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / "photon_verify_cli.txt";
  const std::string cmd = std::string("\"") + VERIFY_EXE + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json minimal(const std::string& suite = "algebra") {
  return {{"schema", 1},
          {"name", "t"},
          {"field", {{"type", "zero"}}},
          {"suites", {suite}},
          {"tolerances", {{"algebra.clifford", 1e-15}, {"algebra.projection", 1e-15}, {"algebra.adjoint", 1e-12}}}};
}

fs::path write_scenario(const json& j, const std::string& name) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

}  // namespace

TEST_CASE("seeds: splitmix64 reference values and per-suite streams") {
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(s) == 0x6e789e6aa1b965f4ULL);
  CHECK(suite_seed(1, "algebra") == suite_seed(1, "algebra"));
  CHECK(suite_seed(1, "algebra") != suite_seed(1, "covariance"));
  CHECK(suite_seed(1, "algebra") != suite_seed(2, "algebra"));
}

TEST_CASE("metrics: max, min and info semantics") {
  CHECK(Metric{"a", 1.0, Metric::Kind::Max, "k", 1.0}.passed());
  CHECK_FALSE(Metric{"a", 1.5, Metric::Kind::Max, "k", 1.0}.passed());
  CHECK(Metric{"a", 11.0, Metric::Kind::Min, "k", 10.0}.passed());
  CHECK_FALSE(Metric{"a", 9.0, Metric::Kind::Min, "k", 10.0}.passed());
  CHECK(Metric{"a", 1e300, Metric::Kind::Info, "", 0.0}.passed());
  SuiteResult r;
  r.metrics.push_back({"bad", 2.0, Metric::Kind::Max, "k", 1.0});
  CHECK_FALSE(r.passed());
  CHECK(r.to_json()["failing_metrics"][0] == "bad");
}

TEST_CASE("scenario validation") {
  CHECK_NOTHROW(parse_scenario(minimal()));
  CHECK(parse_scenario(minimal()).numerics.samples == 200);

  auto j = minimal();
  j["schema"] = 2;
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
  j = minimal("no-such-suite");
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
  j = minimal();
  j["suites"] = {"algebra", "algebra"};
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
  j = minimal();
  j["tolerances"]["algebra.adjoint"] = -1.0;
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
  j = minimal();
  j["tolerances"].erase("algebra.adjoint");  // every threshold must come from the scenario
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
  j = minimal();
  j["numerics"]["radii"] = {100, 50, 400, 800, 1600};
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
  j = minimal();
  j["field"] = {{"type", "analytic"}, {"plus", {{{"n", 1}, {"P", "example_P2"}, {"f", {{"name", "step"}}}}}}};
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);  // P2 is not of degree 1
  j = minimal();
  j["field"] = {{"type", "paper-example"}, {"f1", {{"name", "step"}, {"cutoff_order", 1}}}};
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);  // not C^3
  j = minimal();
  j["field"] = {{"type", "grid"}, {"n", 16}, {"half_width", 2.0}, {"source", {{"type", "zero"}}}};
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);  // algebra does not accept grid fields
}

TEST_CASE("bundled scenarios parse") {
  for (const char* name : {"paper_example.json", "zero_field.json", "broken_tolerance.json", "standing_wave.json"}) {
    INFO(name);
    CHECK_NOTHROW(load_scenario((kScenarios / name).string()));
  }
  const Scenario s = load_scenario((kScenarios / "paper_example.json").string());
  CHECK(s.suites.size() == suite_registry().size());
  CHECK(s.numerics.expected_b1.value() == doctest::Approx(2.0 * M_PI / 15.0).epsilon(1e-15));
  CHECK(s.numerics.cauchy.field);
}

TEST_CASE("cli: list-suites and usage errors") {
  auto r = shell("list-suites");
  CHECK(r.code == kPass);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
  r = shell("list-suites --json");
  CHECK(r.code == kPass);
  const json ids = json::parse(r.out);
  REQUIRE(ids.is_array());
  CHECK(ids.size() == 9);
  CHECK(ids[4] == "cauchy-convergence");
  CHECK(shell("list-suites --bogus").code == kUsage);
  CHECK(shell("").code == kUsage);
  r = shell("--help");
  CHECK(r.code == kPass);
  CHECK(r.out.find("drift.csv") != std::string::npos);
}

TEST_CASE("cli: run exit codes") {
  const fs::path out = fs::temp_directory_path() / "photon_verify_out";
  fs::remove_all(out);
  CHECK(shell("run \"" + (kScenarios / "no_such.json").string() + "\" --out \"" + out.string() + "\"").code == kUsage);
  std::ofstream(fs::temp_directory_path() / "photon_bad.json") << "{ not json";
  CHECK(shell("run \"" + (fs::temp_directory_path() / "photon_bad.json").string() + "\" --out \"" + out.string() + "\"")
            .code == kUsage);

  const fs::path ok = write_scenario(minimal(), "photon_ok.json");
  auto r = shell("run \"" + ok.string() + "\" --out \"" + out.string() + "\" --seed 3");
  CHECK(r.code == kPass);
  const json report = json::parse(slurp(out / "report.json"));
  CHECK(report["schema"] == 1);
  CHECK(report["seed"] == 3);
  CHECK(report["passed"] == true);
  CHECK(report["suites"][0]["id"] == "algebra");

  auto broken = minimal();
  broken["tolerances"]["algebra.adjoint"] = 1e-30;
  r = shell("run \"" + write_scenario(broken, "photon_broken.json").string() + "\" --out \"" + out.string() + "\"");
  CHECK(r.code == kFail);
  CHECK(r.out.find("adjoint_anti_involution_defect") != std::string::npos);
  const json failed = json::parse(slurp(out / "report.json"));
  CHECK(failed["passed"] == false);
  CHECK(failed["suites"][0]["failing_metrics"][0] == "adjoint_anti_involution_defect");
}

TEST_CASE("cli: identical reports for identical scenario and seed, serial or parallel") {
  auto j = minimal();
  j["suites"] = {"algebra", "covariance", "boundary"};
  j["tolerances"].update(json{{"covariance.gamma", 1e-10},
                              {"covariance.parity", 1e-15},
                              {"boundary.e_abs", 1e-8},
                              {"boundary.transverse", 1e-8},
                              {"boundary.b1_rel", 1e-6},
                              {"boundary.t_independence_factor", 1.0},
                              {"boundary.divergence_identity", 1e-6}});
  j["field"] = {{"type", "paper-example"}};
  j["numerics"] = {{"samples", 20}};
  const fs::path sc = write_scenario(j, "photon_det.json");
  const fs::path base = fs::temp_directory_path();
  std::string reports[3];
  int i = 0;
  for (const char* extra : {"", "", " --parallel"}) {
    const fs::path out = base / ("photon_det_" + std::to_string(i));
    REQUIRE(shell("run \"" + sc.string() + "\" --out \"" + out.string() + "\" --seed 5" + extra).code == kPass);
    reports[i++] = slurp(out / "report.json") + slurp(out / "boundary_limits.csv");
  }
  CHECK(reports[0] == reports[1]);
  CHECK(reports[0] == reports[2]);
  REQUIRE(shell("run \"" + sc.string() + "\" --out \"" + (base / "photon_det_3").string() + "\" --seed 6").code ==
          kPass);
  CHECK(slurp(base / "photon_det_3" / "report.json") != slurp(base / "photon_det_0" / "report.json"));
}
