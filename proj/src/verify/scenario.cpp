#include "photon/verify/scenario.hpp"

#include <fstream>
#include <set>

#include <fmt/format.h>

#include "photon/errors.hpp"
#include "photon/verify/suites.hpp"

namespace photon::verify {

using nlohmann::json;

namespace {

Vec3 parse_vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw ScenarioError(fmt::format("{} must be an array of 3 numbers", what));
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

VecPoly parse_poly(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "example_P1") return example_P1();
    if (s == "example_P2") return example_P2();
    throw ScenarioError("unknown named polynomial '" + s + "'");
  }
  if (!j.is_array()) throw ScenarioError("polynomial must be a name or a list of [exponents, coefficients] terms");
  VecPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ScenarioError("polynomial term must be [exponents, coefficients]");
    const auto e = term[0].get<std::vector<int>>();
    if (e.size() != 3) throw ScenarioError("monomial exponents must have 3 entries");
    p.add_term({e[0], e[1], e[2]}, parse_vec3(term[1], "polynomial coefficient"));
  }
  return p;
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void parse_ball(const json& j, BallSpec& b) {
  read(j, "radius", b.radius);
  read(j, "front", b.front);
  read(j, "front_width", b.front_width);
  read(j, "nodes_per_panel", b.nodes_per_panel);
  read(j, "shell_panels", b.shell_panels);
  read(j, "n_theta", b.n_theta);
  read(j, "n_phi", b.n_phi);
}

void parse_pi(const json& j, PiOptions& p) {
  read(j, "radius", p.radius);
  read(j, "front", p.front);
  read(j, "front_width", p.front_width);
  read(j, "nodes_per_panel", p.nodes_per_panel);
  read(j, "tail_panels", p.tail_panels);
  read(j, "n_theta", p.n_theta);
  read(j, "n_phi", p.n_phi);
  read(j, "tolerance", p.tolerance);
}

SphericalWave parse_wave(const json& j) {
  SphericalWave w;
  w.F = parse_profile(j.at("profile"));
  if (j.contains("center")) w.center = parse_vec3(j["center"], "gauge center");
  return w;
}

Numerics parse_numerics(const json& j) {
  Numerics n;
  n.gauge.compact = {{Profile::bump(0.0, 6.0), Vec3(0.5, 0.0, 0.0)}, {Profile::bump(1.0, 3.0), Vec3(0.0, 0.3, 0.0)}};
  n.gauge.noncompact = {{Profile::step(1.0, 1.0), Vec3::Zero()}, {Profile::step(0.5, 2.0), Vec3(0.2, 0.0, 0.0)}};
  if (j.is_null()) return n;
  read(j, "fd_step", n.fd_step);
  read(j, "samples", n.samples);
  if (j.contains("events")) {
    const auto& e = j["events"];
    read(e, "r_min", n.events.r_min);
    read(e, "r_max", n.events.r_max);
    read(e, "t_min", n.events.t_min);
    read(e, "t_max", n.events.t_max);
  }
  if (j.contains("sphere")) {
    read(j["sphere"], "n_theta", n.radial.n_theta);
    read(j["sphere"], "n_phi", n.radial.n_phi);
  }
  read(j, "radii", n.radial.radii);
  if (j.contains("fit")) {
    read(j["fit"], "orders", n.radial.fit.orders);
    read(j["fit"], "log_terms", n.radial.fit.log_terms);
  }
  read(j, "slice_times", n.slice_times);
  if (j.contains("drift")) {
    const auto& d = j["drift"];
    read(d, "t0", n.drift.t0);
    read(d, "t1", n.drift.t1);
    read(d, "time_nodes", n.drift.time_nodes);
    read(d, "floor", n.drift.floor);
    if (d.contains("ball")) parse_ball(d["ball"], n.drift.ball);
    if (d.contains("pi")) parse_pi(d["pi"], n.drift.pi);
  }
  if (j.contains("cauchy")) {
    const auto& c = j["cauchy"];
    if (c.contains("field")) n.cauchy.field = std::make_shared<FieldSpec>(parse_field(c["field"]));
    read(c, "n_coarse", n.cauchy.n_coarse);
    read(c, "half_width", n.cauchy.half_width);
    read(c, "t0", n.cauchy.t0);
    read(c, "T", n.cauchy.T);
    read(c, "cfl", n.cauchy.cfl);
  }
  if (j.contains("gauge")) {
    const auto& g = j["gauge"];
    read(g, "time", n.gauge.time);
    read(g, "perturbation", n.gauge.perturbation);
    if (g.contains("compact")) n.gauge.compact = parse_gauge(g["compact"]);
    if (g.contains("noncompact")) n.gauge.noncompact = parse_gauge(g["noncompact"]);
  }
  if (j.contains("expected_b1")) n.expected_b1 = j["expected_b1"].get<double>();
  if (j.contains("expected_direction")) n.expected_direction = parse_vec3(j["expected_direction"], "expected_direction");
  return n;
}

void validate(const Scenario& s) {
  const auto& n = s.numerics;
  if (!(n.fd_step > 0.0)) throw ScenarioError("fd_step must be positive");
  if (n.samples < 1) throw ScenarioError("samples must be at least 1");
  if (!(n.events.r_min > 0.0) || !(n.events.r_max > n.events.r_min) || !(n.events.t_max >= n.events.t_min))
    throw ScenarioError("event box needs 0 < r_min < r_max and t_min <= t_max");
  try {
    n.radial.validate();
  } catch (const PreconditionError& e) {
    throw ScenarioError(e.what());
  }
  if (n.slice_times.empty()) throw ScenarioError("slice_times must not be empty");
  if (!(n.drift.t1 > n.drift.t0)) throw ScenarioError("drift needs t1 > t0");
  if (n.drift.time_nodes < 1 || !(n.drift.floor >= 0.0)) throw ScenarioError("drift time_nodes >= 1 and floor >= 0");
  if (!(n.drift.ball.radius > 0.0) || n.drift.ball.n_theta < 2 || n.drift.ball.n_phi < 2 ||
      n.drift.ball.nodes_per_panel < 1)
    throw ScenarioError("invalid drift ball");
  if (n.cauchy.n_coarse < 8 || !(n.cauchy.half_width > 0.0) || !(n.cauchy.T > 0.0) || !(n.cauchy.cfl > 0.0) ||
      n.cauchy.cfl > 0.5)
    throw ScenarioError("invalid cauchy numerics (n_coarse >= 8, half_width > 0, T > 0, 0 < cfl <= 0.5)");
  if (n.expected_direction.norm() == 0.0) throw ScenarioError("expected_direction must be nonzero");
  if (n.expected_b1 && !(std::isfinite(*n.expected_b1))) throw ScenarioError("expected_b1 must be finite");
  for (const auto& [k, v] : s.tolerances)
    if (!(v > 0.0) || !std::isfinite(v)) throw ScenarioError("tolerance '" + k + "' must be positive and finite");
  std::set<std::string> seen;
  for (const auto& id : s.suites) {
    if (!seen.insert(id).second) throw ScenarioError("suite '" + id + "' listed twice");
    const SuiteInfo* info = nullptr;
    for (const auto& r : suite_registry())
      if (r.id == id) info = &r;
    if (!info) throw ScenarioError("unknown suite '" + id + "'");
    const bool grid = s.field.kind == FieldSpec::Kind::Grid;
    if (grid && !info->supports_grid) throw ScenarioError("suite '" + id + "' does not support grid fields");
    for (const auto& key : grid ? info->grid_tolerance_keys : info->tolerance_keys)
      if (!s.tolerances.count(key)) throw ScenarioError("suite '" + id + "' requires tolerance '" + key + "'");
  }
}

}  // namespace

std::string FieldSpec::describe() const {
  switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::PaperExample: return "paper-example(" + f1.name() + ", " + f2.name() + ")";
    case Kind::Analytic: return fmt::format("analytic({} plus, {} minus modes)", plus.size(), minus.size());
    case Kind::Grid: return fmt::format("grid(n={}, L={}, t0={}, T={}) of {}", grid.n, grid.half_width, t0, T,
                                        source ? source->describe() : "?");
  }
  return "?";
}

double Scenario::tolerance(const std::string& key) const {
  const auto it = tolerances.find(key);
  if (it == tolerances.end()) throw ScenarioError("missing tolerance '" + key + "'");
  return it->second;
}

Profile parse_profile(const json& j) {
  if (!j.is_object() || !j.contains("name")) throw ScenarioError("profile must be an object with a name");
  const auto name = j["name"].get<std::string>();
  Profile p;
  if (name == "zero") p = Profile::zero();
  else if (name == "polynomial") p = Profile::polynomial(j.value("coefficients", std::vector<double>{}));
  else if (name == "log_linear") p = Profile::log_linear();
  else if (name == "rational") p = Profile::rational(j.value("power", 3));
  else if (name == "step") p = Profile::step();
  else if (name == "bump") p = Profile::bump(0.0, 1.0);
  else throw ScenarioError("unknown profile '" + name + "'");
  read(j, "amplitude", p.amplitude);
  read(j, "width", p.width);
  read(j, "center", p.center);
  read(j, "cutoff_order", p.cutoff_order);
  try {
    p.validate();
  } catch (const PreconditionError& e) {
    throw ScenarioError(e.what());
  }
  return p;
}

MultipoleMode parse_mode(const json& j) {
  MultipoleMode m;
  m.n = j.at("n").get<int>();
  m.P = parse_poly(j.at("P"));
  if (j.contains("Pm2")) m.Pm2 = parse_poly(j["Pm2"]);
  m.f = parse_profile(j.at("f"));
  const auto dir = j.value("direction", std::string("outgoing"));
  if (dir == "outgoing") m.direction = Direction::Outgoing;
  else if (dir == "incoming") m.direction = Direction::Incoming;
  else throw ScenarioError("direction must be 'outgoing' or 'incoming'");
  try {
    m.validate();
  } catch (const PreconditionError& e) {
    throw ScenarioError(std::string("invalid mode: ") + e.what());
  }
  return m;
}

FieldSpec parse_field(const json& j) {
  FieldSpec f;
  const auto type = j.at("type").get<std::string>();
  if (type == "zero") {
    f.kind = FieldSpec::Kind::Zero;
  } else if (type == "paper-example") {
    f.kind = FieldSpec::Kind::PaperExample;
    if (j.contains("f1")) f.f1 = parse_profile(j["f1"]);
    if (j.contains("f2")) f.f2 = parse_profile(j["f2"]);
    if (f.f1.smoothness() < 3 || f.f2.smoothness() < 4)
      throw ScenarioError("example profiles must be C^3 (f1) and C^4 (f2)");
  } else if (type == "analytic") {
    f.kind = FieldSpec::Kind::Analytic;
    for (const auto& m : j.value("plus", json::array())) f.plus.push_back(parse_mode(m));
    for (const auto& m : j.value("minus", json::array())) f.minus.push_back(parse_mode(m));
  } else if (type == "grid") {
    f.kind = FieldSpec::Kind::Grid;
    f.source = std::make_shared<FieldSpec>(parse_field(j.at("source")));
    if (f.source->kind == FieldSpec::Kind::Grid) throw ScenarioError("grid source must be an analytic field");
    f.grid.n = j.at("n").get<int>();
    f.grid.half_width = j.at("half_width").get<double>();
    read(j, "t0", f.t0);
    read(j, "T", f.T);
    read(j, "cfl", f.cfl);
    try {
      f.grid.validate();
    } catch (const PreconditionError& e) {
      throw ScenarioError(e.what());
    }
    if (!(f.T > 0.0) || !(f.cfl > 0.0) || f.cfl > 0.5) throw ScenarioError("grid needs T > 0 and 0 < cfl <= 0.5");
  } else {
    throw ScenarioError("unknown field type '" + type + "'");
  }
  return f;
}

GaugeFunction parse_gauge(const json& j) {
  GaugeFunction g;
  if (j.contains("plus")) g.h_plus = parse_wave(j["plus"]);
  if (j.contains("minus")) g.h_minus = parse_wave(j["minus"]);
  return g;
}

Scenario parse_scenario(const json& j) {
  try {
    if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
    if (j.value("schema", -1) != kScenarioSchema)
      throw ScenarioError(fmt::format("scenario schema must be {}", kScenarioSchema));
    Scenario s;
    s.name = j.value("name", std::string("unnamed"));
    if (j.contains("constants")) {
      read(j["constants"], "hbar", s.constants.hbar);
      read(j["constants"], "m_photon", s.constants.m_photon);
    }
    try {
      s.constants.validate();
    } catch (const PreconditionError& e) {
      throw ScenarioError(e.what());
    }
    s.field = parse_field(j.at("field"));
    const auto& suites = j.at("suites");
    if (suites.is_string() && suites.get<std::string>() == "all") {
      for (const auto& r : suite_registry()) s.suites.push_back(r.id);
    } else {
      s.suites = suites.get<std::vector<std::string>>();
    }
    if (s.suites.empty()) throw ScenarioError("no suites requested");
    s.numerics = parse_numerics(j.value("numerics", json()));
    s.tolerances = j.value("tolerances", std::map<std::string, double>{});
    validate(s);
    return s;
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario parse error: ") + e.what());
  }
  return parse_scenario(j);
}

FieldPtr build_field(const FieldSpec& spec, const PhysicalConstants& c, bool parallel) {
  switch (spec.kind) {
    case FieldSpec::Kind::Zero: return std::make_shared<ZeroField>(c);
    case FieldSpec::Kind::PaperExample: return paper_example_field(c, spec.f1, spec.f2);
    case FieldSpec::Kind::Analytic: return std::make_shared<MultipoleField>(spec.plus, spec.minus, c);
    case FieldSpec::Kind::Grid: {
      const FieldPtr src = build_field(*spec.source, c, parallel);
      CauchyOptions o;
      o.cfl = spec.cfl;
      o.parallel = parallel;
      return std::make_shared<GridField>(cauchy_evolve(sample_slab(*src, spec.grid, spec.t0, parallel), spec.t0,
                                                       spec.T, c, o));
    }
  }
  throw ScenarioError("unknown field kind");
}

}  // namespace photon::verify
