#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "photon/currents.hpp"
#include "photon/grid.hpp"
#include "photon/quadrature.hpp"

namespace photon {

// The eighteen real charges: the ten Noether charges (Re z, Im z, r+, r-, Re J1..3, Im J1..3)
// followed by Re/Im K0 and Re/Im K1..3.
inline constexpr int kChargeCount = 18;
inline constexpr int kNoetherCount = Generator::kBasisSize;
const std::array<std::string, kChargeCount>& charge_names();
using ChargeVector = Eigen::Matrix<double, kChargeCount, 1>;

// Densities, spatial fluxes F and sources S (d_t rho + div F = S) of all charges at one event.
// S vanishes for every charge except r_pm.
struct ChargeSample {
  ChargeVector density = ChargeVector::Zero();
  Eigen::Matrix<double, kChargeCount, 3> flux = Eigen::Matrix<double, kChargeCount, 3>::Zero();
  ChargeVector source = ChargeVector::Zero();
};
ChargeSample charge_sample(const Bispinor& psi, const std::array<Bispinor, 4>& chi_grad, double hbar_over_m);
ChargeSample charge_sample(const PhotonField& field, double t, const Vec3& s);

struct ChargeReport {
  cplx z = 0.0;
  double r_plus = 0.0, r_minus = 0.0;
  CVec3 J = CVec3::Zero();
  cplx K0 = 0.0;
  CVec3 K = CVec3::Zero();
  double slice_time = 0.0;
  std::string domain;
  std::string quadrature;
  ChargeVector l1 = ChargeVector::Zero();  // integral of |density|, the scale for vanishing charges

  ChargeVector values() const;
  static ChargeReport from_values(const ChargeVector& q);
  nlohmann::ordered_json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

// Ball of radius R with radial panels refined around a wave front.
struct BallSpec {
  double radius = 20.0;
  double front = 0.0;         // front position at the slice (panels are refined on [front, front + width])
  double front_width = 1.0;
  int nodes_per_panel = 16;
  int shell_panels = 4;
  int n_theta = 32, n_phi = 64;

  std::string describe() const;
};

ChargeReport charges_on_ball(const PhotonField& field, double t, const BallSpec& ball, bool parallel = true);

// Integral of F.n over the sphere of radius R for every charge.
ChargeVector flux_on_sphere(const PhotonField& field, double t, double R, int n_theta, int n_phi,
                            bool parallel = true);

struct DriftReport {
  ChargeVector q0 = ChargeVector::Zero(), q1 = ChargeVector::Zero();
  ChargeVector flux = ChargeVector::Zero();      // time integral of the outward flux
  ChargeVector scale = ChargeVector::Zero();     // max(|Q0|, floor * L1)
  ChargeVector drift = ChargeVector::Zero();     // |Q1 - Q0 + flux| / scale
  ChargeVector source = ChargeVector::Zero();    // space-time integral of the source (r_pm only)
  ChargeVector balance = ChargeVector::Zero();   // |Q1 - Q0 + flux - source| / scale
};

// Flux-corrected drift between two slices; time integral by Gauss-Legendre with time_nodes points.
// The ball front moves with the slice: front(t) = front0 + (t - t0). With with_source the source
// integral and the source-corrected balance are evaluated too (one ball integral per time node).
DriftReport conservation_drift(const PhotonField& field, double t0, double t1, const BallSpec& ball0,
                               int time_nodes = 12, double floor = 1e-3, bool parallel = true,
                               bool with_source = false);

// Integral of the source densities over the ball.
ChargeVector source_on_ball(const PhotonField& field, double t, const BallSpec& ball, bool parallel = true);

struct PiOptions {
  double radius = 20.0;       // inner region [0, R] with front-adapted panels, tail [R, inf) compactified
  double front = 0.0;
  double front_width = 1.0;
  int nodes_per_panel = 16;
  int tail_panels = 8;
  int n_theta = 32, n_phi = 64;
  double tolerance = 1e-6;    // relative change allowed when R is doubled
};

struct PiResult {
  FourVector pi = FourVector::Zero();
  double doubling_change = 0.0;
};

// pi_(mu) = integral of j^0 for X = e_(mu); throws ConvergenceError when doubling R changes it beyond tolerance.
PiResult pi_vector(const PhotonField& field, double t, const PiOptions& opts = {}, bool parallel = true);

// Midpoint-rule charges over the interior nodes of a grid field.
struct GridCharges {
  ChargeVector q = ChargeVector::Zero();
  ChargeVector l1 = ChargeVector::Zero();
  double psi_l2 = 0.0;  // sqrt(sum |psi|_F^2 dx^3)
};
GridCharges charges_on_grid(const GridField& grid);

// |Q(psi + d) - Q(psi)| <= (1/4) |G|_op (2 |psi| |d| + |d|^2) for a sesquilinear charge.
double sesquilinear_bound(const Generator& G, double psi_l2, double delta_l2);

}  // namespace photon
