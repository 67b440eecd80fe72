#pragma once

#include <array>
#include <functional>
#include <vector>

#include "photon/currents.hpp"
#include "photon/gauge.hpp"

namespace photon {

// X = -(i hbar/m)(chi-^dag sigma chi+)_S and Y_k = -(i hbar/m)[(chi-^dag sigma chi+) sigma_k]_S.
struct BoundaryDensity {
  CVec3 X = CVec3::Zero();
  std::array<CVec3, 3> Y{CVec3::Zero(), CVec3::Zero(), CVec3::Zero()};
};
BoundaryDensity boundary_density(const Bispinor& psi, double hbar_over_m);
BoundaryDensity boundary_density_eval(const PhotonField& field, double t, const Vec3& s);

// div X - (z - K0) and div Y_k - (J_k - K_k) by fourth-order differences of X, Y (step h).
// Scales are the sums of absolute values of the individual terms.
struct DivergenceResidual {
  std::array<cplx, 4> residual{};  // 0: X, 1..3: Y_k
  std::array<double, 4> scale{};
  double max_relative() const;
};
DivergenceResidual divergence_identity_residual(const PhotonField& field, double t, const Vec3& s, double h = 1e-2);

// Product Gauss-Legendre(theta) x uniform(phi) integral of F.n over the sphere |s| = r.
using VectorIntegrand = std::function<CVec3(const Vec3&)>;
cplx sphere_integral(const VectorIntegrand& F, double r, int n_theta = 32, int n_phi = 64, bool parallel = false);

// mu(r) = int X.n dS and f_k(r) = int Y_k.n dS at one radius, in one pass.
struct SphereIntegrals {
  double radius = 0.0;
  cplx mu = 0.0;
  CVec3 f = CVec3::Zero();
};
SphereIntegrals sphere_integrals(const PhotonField& field, double t, double r, int n_theta = 32, int n_phi = 64,
                                 bool parallel = true);

// Least-squares fit of v(r) = A + sum_{j=1..orders} (B_j + B'_j log r) / r^j (log terms optional).
struct RadialFitOptions {
  int orders = 3;
  bool log_terms = true;
};
struct Extrapolation {
  cplx limit = 0.0;
  double residual_rms = 0.0;  // fit residual
  double loo_change = 0.0;    // |A - A'| with A' refitted without the smallest radius
  double error() const { return std::max(residual_rms, loo_change); }
};
Extrapolation extrapolate(const std::vector<double>& radii, const std::vector<cplx>& values,
                          const RadialFitOptions& opts = {});

struct RadialOptions {
  std::vector<double> radii{100, 200, 400, 800, 1600, 3200, 6400, 12800};
  RadialFitOptions fit;
  int n_theta = 32, n_phi = 64;
  void validate() const;
};

struct BoundaryLimit {
  double time = 0.0;
  Extrapolation mu;
  std::array<Extrapolation, 3> f;
  std::vector<SphereIntegrals> samples;
  double max_error() const;
};
BoundaryLimit radial_limit(const PhotonField& field, double t, const RadialOptions& opts = {}, bool parallel = true);

// Constant self-dual bispinor with phi+ = i sigma.f, phi- = phi+^dagger, chi = 0.
struct AsymptoticBispinor {
  cplx mu = 0.0;
  CVec3 f = CVec3::Zero();
  Bispinor psi_inf = Bispinor::Zero();

  Vec3 e() const { return f.real(); }
  Vec3 b() const { return f.imag(); }
  static AsymptoticBispinor assemble(cplx mu, const CVec3& f);
};
AsymptoticBispinor asymptotic_bispinor(const BoundaryLimit& limit);
AsymptoticBispinor asymptotic_bispinor(const PhotonField& field, double t, const RadialOptions& opts = {},
                                       bool parallel = true);

struct GaugeInvarianceReport {
  BoundaryLimit before, after;
  double delta_mu = 0.0;
  Vec3 delta_f = Vec3::Zero();
  double error_estimate = 0.0;  // sum of both extrapolation errors
  double max_delta() const { return std::max(delta_mu, delta_f.maxCoeff()); }
};
GaugeInvarianceReport gauge_invariance_check(FieldPtr field, const GaugeFunction& gauge, double t,
                                             const RadialOptions& opts = {}, bool parallel = true);
// Same comparison against an arbitrary modified field (negative controls).
GaugeInvarianceReport compare_boundary(const PhotonField& a, const PhotonField& b, double t,
                                       const RadialOptions& opts = {}, bool parallel = true);

}  // namespace photon
