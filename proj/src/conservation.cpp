#include "photon/conservation.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "photon/errors.hpp"

namespace photon {

namespace {

using Accum = Eigen::Matrix<double, 2 * kChargeCount, 1>;

struct Basis {
  std::array<Bispinor, kNoetherCount> G;
  Basis() {
    for (int k = 0; k < kNoetherCount; ++k) G[k] = Generator::basis(k).matrix();
  }
};

const Basis& basis() {
  static const Basis b;
  return b;
}

}  // namespace

const std::array<std::string, kChargeCount>& charge_names() {
  static const std::array<std::string, kChargeCount> names = {
      "re_z",  "im_z",  "r_plus", "r_minus", "re_J1", "re_J2", "re_J3", "im_J1", "im_J2",
      "im_J3", "re_K0", "im_K0",  "re_K1",   "re_K2", "re_K3", "im_K1", "im_K2", "im_K3"};
  return names;
}

ChargeSample charge_sample(const Bispinor& psi, const std::array<Bispinor, 4>& chi_grad, double hbar_over_m) {
  ChargeSample out;
  const Bispinor bar = dirac_adjoint(psi);
  std::array<Bispinor, 4> M;
  for (int mu = 0; mu < 4; ++mu) M[mu] = bar * gamma(mu) * psi;
  const auto& B = basis();
  for (int k = 0; k < kNoetherCount; ++k) {
    out.density(k) = 0.25 * (M[0] * B.G[k]).trace().real();
    for (int j = 0; j < 3; ++j) out.flux(k, j) = 0.25 * (M[j + 1] * B.G[k]).trace().real();
  }
  const double m_over_hbar = 1.0 / hbar_over_m;
  out.source(2) = charge_r_source(psi, Chirality::Plus, m_over_hbar);
  out.source(3) = charge_r_source(psi, Chirality::Minus, m_over_hbar);
  // Green currents: density K^(a)_0, flux -K^(a)_k.
  for (int a = 0; a < 4; ++a) {
    const int re = a == 0 ? 10 : 11 + a;
    const int im = a == 0 ? 11 : 14 + a;
    const cplx k0 = green_current(psi, chi_grad, hbar_over_m, a, 0);
    out.density(re) = k0.real();
    out.density(im) = k0.imag();
    for (int j = 0; j < 3; ++j) {
      const cplx kj = green_current(psi, chi_grad, hbar_over_m, a, j + 1);
      out.flux(re, j) = -kj.real();
      out.flux(im, j) = -kj.imag();
    }
  }
  return out;
}

ChargeSample charge_sample(const PhotonField& field, double t, const Vec3& s) {
  return charge_sample(field.value(t, s), field.chi_gradient(t, s), field.constants().hbar_over_m());
}

ChargeVector ChargeReport::values() const {
  ChargeVector q;
  q << z.real(), z.imag(), r_plus, r_minus, J(0).real(), J(1).real(), J(2).real(), J(0).imag(), J(1).imag(),
      J(2).imag(), K0.real(), K0.imag(), K(0).real(), K(1).real(), K(2).real(), K(0).imag(), K(1).imag(), K(2).imag();
  return q;
}

ChargeReport ChargeReport::from_values(const ChargeVector& q) {
  ChargeReport r;
  r.z = {q(0), q(1)};
  r.r_plus = q(2);
  r.r_minus = q(3);
  for (int k = 0; k < 3; ++k) {
    r.J(k) = {q(4 + k), q(7 + k)};
    r.K(k) = {q(12 + k), q(15 + k)};
  }
  r.K0 = {q(10), q(11)};
  return r;
}

nlohmann::ordered_json ChargeReport::to_json() const {
  nlohmann::ordered_json j;
  j["slice_time"] = slice_time;
  j["domain"] = domain;
  j["quadrature"] = quadrature;
  const ChargeVector q = values();
  auto& c = j["charges"];
  for (int k = 0; k < kChargeCount; ++k) c[charge_names()[k]] = q(k);
  return j;
}

std::string ChargeReport::csv_header() {
  std::string h = "t";
  for (const auto& n : charge_names()) h += "," + n;
  return h;
}

std::string ChargeReport::csv_row() const {
  std::string row = fmt::format("{:.17g}", slice_time);
  const ChargeVector q = values();
  for (int k = 0; k < kChargeCount; ++k) row += fmt::format(",{:.17g}", q(k));
  return row;
}

std::string BallSpec::describe() const {
  return fmt::format("ball R={} front={} width={} gl{}x{}panels sphere {}x{}", radius, front, front_width,
                     nodes_per_panel, shell_panels, n_theta, n_phi);
}

ChargeReport charges_on_ball(const PhotonField& field, double t, const BallSpec& ball, bool parallel) {
  if (!(ball.radius > 0.0)) throw PreconditionError("ball radius must be positive");
  const auto breaks = front_adapted_breaks(ball.radius, std::max(ball.front, 0.0), ball.front_width, ball.shell_panels);
  const BallRule rule(composite_gauss(breaks, ball.nodes_per_panel), SphereRule(ball.n_theta, ball.n_phi));
  const Accum acc = integrate_nodes<Accum>(
      rule.nodes, rule.weights,
      [&](const Vec3& s) {
        const ChargeVector d = charge_sample(field, t, s).density;
        Accum a;
        a << d, d.cwiseAbs();
        return a;
      },
      parallel);
  ChargeReport r = ChargeReport::from_values(acc.head<kChargeCount>());
  r.l1 = acc.tail<kChargeCount>();
  r.slice_time = t;
  r.domain = fmt::format("ball radius {}", ball.radius);
  r.quadrature = ball.describe();
  return r;
}

ChargeVector source_on_ball(const PhotonField& field, double t, const BallSpec& ball, bool parallel) {
  if (!(ball.radius > 0.0)) throw PreconditionError("ball radius must be positive");
  const auto breaks = front_adapted_breaks(ball.radius, std::max(ball.front, 0.0), ball.front_width, ball.shell_panels);
  const BallRule rule(composite_gauss(breaks, ball.nodes_per_panel), SphereRule(ball.n_theta, ball.n_phi));
  const double m_over_hbar = 1.0 / field.constants().hbar_over_m();
  return integrate_nodes<ChargeVector>(
      rule.nodes, rule.weights,
      [&](const Vec3& s) {
        const Bispinor psi = field.value(t, s);
        ChargeVector q = ChargeVector::Zero();
        q(2) = charge_r_source(psi, Chirality::Plus, m_over_hbar);
        q(3) = charge_r_source(psi, Chirality::Minus, m_over_hbar);
        return q;
      },
      parallel);
}

ChargeVector flux_on_sphere(const PhotonField& field, double t, double R, int n_theta, int n_phi, bool parallel) {
  const SphereRule sphere(n_theta, n_phi);
  std::vector<Vec3> nodes(sphere.nodes.size());
  std::vector<double> weights(sphere.weights.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i] = R * sphere.nodes[i];
    weights[i] = R * R * sphere.weights[i];
  }
  return integrate_nodes<ChargeVector>(
      nodes, weights,
      [&](const Vec3& s) { return ChargeVector(charge_sample(field, t, s).flux * (s / s.norm())); }, parallel);
}

DriftReport conservation_drift(const PhotonField& field, double t0, double t1, const BallSpec& ball0, int time_nodes,
                               double floor, bool parallel, bool with_source) {
  if (!(t1 > t0)) throw PreconditionError("conservation_drift needs t1 > t0");
  if (!(floor >= 0.0)) throw PreconditionError("drift floor must be non-negative");
  BallSpec ball1 = ball0;
  ball1.front = ball0.front + (t1 - t0);
  const ChargeReport c0 = charges_on_ball(field, t0, ball0, parallel);
  const ChargeReport c1 = charges_on_ball(field, t1, ball1, parallel);
  const auto rule = gauss_legendre(time_nodes, t0, t1);
  std::vector<ChargeVector> terms(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    terms[i] = rule.weights[i] * flux_on_sphere(field, rule.nodes[i], ball0.radius, ball0.n_theta, ball0.n_phi, parallel);
  DriftReport d;
  d.q0 = c0.values();
  d.q1 = c1.values();
  d.flux = pairwise_sum(terms);
  if (with_source) {
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      BallSpec b = ball0;
      b.front = ball0.front + (rule.nodes[i] - t0);
      terms[i] = rule.weights[i] * source_on_ball(field, rule.nodes[i], b, parallel);
    }
    d.source = pairwise_sum(terms);
  }
  for (int k = 0; k < kChargeCount; ++k) {
    d.scale(k) = std::max(std::abs(d.q0(k)), floor * c0.l1(k));
    const double num = std::abs(d.q1(k) - d.q0(k) + d.flux(k));
    const double bal = std::abs(d.q1(k) - d.q0(k) + d.flux(k) - d.source(k));
    d.drift(k) = d.scale(k) > 0.0 ? num / d.scale(k) : num;
    d.balance(k) = d.scale(k) > 0.0 ? bal / d.scale(k) : bal;
  }
  return d;
}

namespace {

FourVector pi_with_radius(const PhotonField& field, double t, const PiOptions& o, double R, bool parallel) {
  const SphereRule sphere(o.n_theta, o.n_phi);
  // Inner ball.
  const auto breaks = front_adapted_breaks(R, std::max(o.front, 0.0), o.front_width);
  QuadratureRule1D radial = composite_gauss(breaks, o.nodes_per_panel);
  // Tail r = R / y^4, y in (0, 1], graded towards y = 0. Densities decaying like r^-4 (up to logs) become
  // y^3-smooth integrands, so the whole of [R, inf) is covered without a cutoff.
  std::vector<double> yb{0.0};
  for (int p = o.tail_panels - 1; p >= 0; --p) yb.push_back(std::pow(0.5, p));
  const QuadratureRule1D tail = composite_gauss(yb, o.nodes_per_panel);
  for (std::size_t i = 0; i < tail.nodes.size(); ++i) {
    const double y = tail.nodes[i], y2 = y * y;
    radial.nodes.push_back(R / (y2 * y2));
    radial.weights.push_back(tail.weights[i] * 4.0 * R / (y2 * y2 * y));
  }
  const BallRule rule(radial, sphere);
  return integrate_nodes<FourVector>(
      rule.nodes, rule.weights,
      [&](const Vec3& s) {
        const Bispinor phi = block_projection(field.value(t, s));
        FourVector j;
        for (int mu = 0; mu < 4; ++mu) j(mu) = killing_current(phi, FourVector::Unit(mu), 0);
        return j;
      },
      parallel);
}

}  // namespace

PiResult pi_vector(const PhotonField& field, double t, const PiOptions& opts, bool parallel) {
  if (!(opts.radius > 0.0)) throw PreconditionError("pi_vector radius must be positive");
  const FourVector a = pi_with_radius(field, t, opts, opts.radius, parallel);
  const FourVector b = pi_with_radius(field, t, opts, 2.0 * opts.radius, parallel);
  PiResult r;
  r.pi = b;
  const double scale = b.cwiseAbs().maxCoeff();
  r.doubling_change = scale > 0.0 ? (a - b).cwiseAbs().maxCoeff() / scale : 0.0;
  if (r.doubling_change > opts.tolerance)
    throw ConvergenceError(fmt::format("pi_vector truncation not converged (relative change {:.3e})", r.doubling_change));
  return r;
}

GridCharges charges_on_grid(const GridField& grid) {
  const auto& g = grid.spec();
  const int n = g.n;
  const double hom = grid.constants().hbar_over_m();
  const int inner = n - 2;
  std::vector<Accum> vals(static_cast<std::size_t>(inner) * inner * inner);
  std::vector<double> norms(vals.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k < n - 1; ++k) {
        const Bispinor psi = grid.node_value(i, j, k);
        auto grad = grid.node_gradient(i, j, k);
        for (auto& d : grad) d = off_diagonal(d);
        const ChargeVector d = charge_sample(psi, grad, hom).density;
        const std::size_t q = (static_cast<std::size_t>(i - 1) * inner + (j - 1)) * inner + (k - 1);
        vals[q] << d, d.cwiseAbs();
        norms[q] = psi.squaredNorm();
      }
  const double dv = std::pow(g.spacing(), 3);
  const Accum s = pairwise_sum(vals) * dv;
  GridCharges out;
  out.q = s.head<kChargeCount>();
  out.l1 = s.tail<kChargeCount>();
  out.psi_l2 = std::sqrt(pairwise_sum(norms) * dv);
  return out;
}

double sesquilinear_bound(const Generator& G, double psi_l2, double delta_l2) {
  // |tr(A B)| <= |A|_F |B|_op, and |psi-bar gamma^0 psi'|_F <= |psi|_F |psi'|_F.
  const Eigen::JacobiSVD<Bispinor> svd(G.matrix());
  const double op = svd.singularValues()(0);
  return 0.25 * op * (2.0 * psi_l2 * delta_l2 + delta_l2 * delta_l2);
}

}  // namespace photon
