#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "photon/boundary.hpp"
#include "photon/conservation.hpp"
#include "photon/gauge.hpp"
#include "photon/grid.hpp"

namespace photon::verify {

// Parse or validation failure of a scenario (CLI exit code 2).
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kScenarioSchema = 1;

// Field description: zero, the worked example, explicit multipole modes, or a grid evolved from one
// of those.
struct FieldSpec {
  enum class Kind { Zero, PaperExample, Analytic, Grid };
  Kind kind = Kind::Zero;
  Profile f1 = Profile::log_linear(), f2 = Profile::rational(3);  // PaperExample
  std::vector<MultipoleMode> plus, minus;                         // Analytic
  // Grid: the source field is sampled at t0 and evolved to t0 + T with zero boundary values.
  std::shared_ptr<FieldSpec> source;
  GridSpec grid;
  double t0 = 0.0, T = 0.5, cfl = 0.5;

  std::string describe() const;
};

struct EventBox {
  double r_min = 2.0, r_max = 10.0;
  double t_min = 0.0, t_max = 1.0;
};

struct DriftNumerics {
  double t0 = 0.0, t1 = 0.5;
  int time_nodes = 12;
  double floor = 1e-3;
  BallSpec ball;
  PiOptions pi;
};

struct CauchyNumerics {
  std::shared_ptr<FieldSpec> field;  // defaults to the scenario field
  int n_coarse = 64;
  double half_width = 3.0;
  double t0 = 1.0, T = 1.0, cfl = 0.5;
};

struct GaugeNumerics {
  double time = 0.25;
  GaugeFunction compact, noncompact;
  double perturbation = 1e-3;  // amplitude of the non-wave control P1 / r^2 added to chi+
};

struct Numerics {
  double fd_step = 1e-2;
  int samples = 200;
  EventBox events;
  RadialOptions radial;
  std::vector<double> slice_times{0.0, 0.25, 0.5};
  DriftNumerics drift;
  CauchyNumerics cauchy;
  GaugeNumerics gauge;
  std::optional<double> expected_b1;
  Vec3 expected_direction = Vec3::UnitX();
};

struct Scenario {
  std::string name;
  PhysicalConstants constants;
  FieldSpec field;
  std::vector<std::string> suites;
  Numerics numerics;
  std::map<std::string, double> tolerances;

  // Tolerance lookup; throws ScenarioError if absent.
  double tolerance(const std::string& key) const;
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

// Builds the field (for Grid: runs the evolution).
FieldPtr build_field(const FieldSpec& spec, const PhysicalConstants& c, bool parallel = true);

// JSON forms shared with scenario files.
Profile parse_profile(const nlohmann::json& j);
MultipoleMode parse_mode(const nlohmann::json& j);
FieldSpec parse_field(const nlohmann::json& j);
GaugeFunction parse_gauge(const nlohmann::json& j);

}  // namespace photon::verify
