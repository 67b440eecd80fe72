#include "photon/boundary.hpp"

#include <cmath>

#include "photon/errors.hpp"
#include "photon/fd.hpp"
#include "photon/quadrature.hpp"

namespace photon {

BoundaryDensity boundary_density(const Bispinor& psi, double hbar_over_m) {
  const Blocks b = split(psi);
  BoundaryDensity out;
  const cplx pre = -I * hbar_over_m * 0.25;
  for (int j = 0; j < 3; ++j) {
    const Quaternion m = b.chi_minus.adjoint() * pauli(j + 1) * b.chi_plus;
    out.X(j) = pre * m.trace();
    for (int k = 0; k < 3; ++k) out.Y[k](j) = pre * (m * pauli(k + 1)).trace();
  }
  return out;
}

BoundaryDensity boundary_density_eval(const PhotonField& field, double t, const Vec3& s) {
  return boundary_density(field.value(t, s), field.constants().hbar_over_m());
}

double DivergenceResidual::max_relative() const {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, scale[i] > 0.0 ? std::abs(residual[i]) / scale[i] : std::abs(residual[i]));
  return m;
}

DivergenceResidual divergence_identity_residual(const PhotonField& field, double t, const Vec3& s, double h) {
  using Vec12 = Eigen::Matrix<cplx, 12, 1>;
  auto packed = [&](double tt, const Vec3& x) {
    const BoundaryDensity d = boundary_density_eval(field, tt, x);
    Vec12 v;
    v << d.X, d.Y[0], d.Y[1], d.Y[2];
    return v;
  };
  std::array<Vec12, 3> d;
  for (int j = 0; j < 3; ++j) d[j] = fd_derivative(packed, t, s, j + 1, h);
  const Bispinor psi = field.value(t, s);
  const cplx z = charge_z(psi), K0 = charge_K0(field, t, s);
  const CVec3 J = charge_J(psi), K = charge_K(field, t, s);
  DivergenceResidual r;
  for (int c = 0; c < 4; ++c) {
    cplx div = 0.0;
    double sc = 0.0;
    for (int j = 0; j < 3; ++j) {
      div += d[j](3 * c + j);
      sc += std::abs(d[j](3 * c + j));
    }
    const cplx q = c == 0 ? z : J(c - 1);
    const cplx k = c == 0 ? K0 : K(c - 1);
    r.residual[c] = div - (q - k);
    r.scale[c] = sc + std::abs(q) + std::abs(k);
  }
  return r;
}

cplx sphere_integral(const VectorIntegrand& F, double r, int n_theta, int n_phi, bool parallel) {
  if (!(r > 0.0)) throw PreconditionError("sphere radius must be positive");
  const SphereRule sphere(n_theta, n_phi);
  std::vector<double> w(sphere.weights.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = r * r * sphere.weights[i];
  return integrate_nodes<cplx>(
      sphere.nodes, w, [&](const Vec3& n) { return n.cast<cplx>().dot(F(r * n)); }, parallel);
}

SphereIntegrals sphere_integrals(const PhotonField& field, double t, double r, int n_theta, int n_phi, bool parallel) {
  if (!(r > 0.0)) throw PreconditionError("sphere radius must be positive");
  using Vec4c = Eigen::Matrix<cplx, 4, 1>;
  const SphereRule sphere(n_theta, n_phi);
  std::vector<double> w(sphere.weights.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = r * r * sphere.weights[i];
  const Vec4c v = integrate_nodes<Vec4c>(
      sphere.nodes, w,
      [&](const Vec3& n) {
        const BoundaryDensity d = boundary_density_eval(field, t, r * n);
        // X.n without conjugation: n is real.
        return Vec4c(d.X.transpose() * n.cast<cplx>(), d.Y[0].transpose() * n.cast<cplx>(),
                     d.Y[1].transpose() * n.cast<cplx>(), d.Y[2].transpose() * n.cast<cplx>());
      },
      parallel);
  return {r, v(0), v.tail<3>()};
}

namespace {

Eigen::MatrixXd fit_design(const std::vector<double>& radii, const RadialFitOptions& o) {
  const double r0 = radii.front();
  const int cols = 1 + o.orders * (o.log_terms ? 2 : 1);
  Eigen::MatrixXd A(radii.size(), cols);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double x = r0 / radii[i];
    int c = 0;
    A(i, c++) = 1.0;
    for (int j = 1; j <= o.orders; ++j) {
      A(i, c++) = std::pow(x, j);
      if (o.log_terms) A(i, c++) = std::pow(x, j) * std::log(x);
    }
  }
  return A;
}

// Returns (limit, rms residual).
std::pair<cplx, double> fit_limit(const std::vector<double>& radii, const std::vector<cplx>& values,
                                  const RadialFitOptions& o) {
  const Eigen::MatrixXd A = fit_design(radii, o);
  Eigen::MatrixXd rhs(values.size(), 2);
  for (std::size_t i = 0; i < values.size(); ++i) rhs.row(i) << values[i].real(), values[i].imag();
  const Eigen::MatrixXd coef = A.colPivHouseholderQr().solve(rhs);
  const Eigen::MatrixXd res = A * coef - rhs;
  const double rms = std::sqrt(res.squaredNorm() / static_cast<double>(values.size()));
  return {{coef(0, 0), coef(0, 1)}, rms};
}

}  // namespace

Extrapolation extrapolate(const std::vector<double>& radii, const std::vector<cplx>& values,
                          const RadialFitOptions& opts) {
  const int cols = 1 + opts.orders * (opts.log_terms ? 2 : 1);
  if (opts.orders < 0) throw PreconditionError("fit order must be non-negative");
  if (radii.size() != values.size()) throw PreconditionError("radii and values differ in length");
  if (static_cast<int>(radii.size()) < cols + 1)
    throw PreconditionError("radial fit needs at least one more radius than fit parameters");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw PreconditionError("radii must be strictly increasing");
  Extrapolation e;
  std::tie(e.limit, e.residual_rms) = fit_limit(radii, values, opts);
  const std::vector<double> r2(radii.begin() + 1, radii.end());
  const std::vector<cplx> v2(values.begin() + 1, values.end());
  e.loo_change = std::abs(fit_limit(r2, v2, opts).first - e.limit);
  return e;
}

void RadialOptions::validate() const {
  const int cols = 1 + fit.orders * (fit.log_terms ? 2 : 1);
  if (static_cast<int>(radii.size()) < cols + 1) throw PreconditionError("too few radii for the radial fit");
  if (!(radii.front() > 0.0)) throw PreconditionError("radii must be positive");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw PreconditionError("radii must be strictly increasing");
  if (n_theta < 2 || n_phi < 2) throw PreconditionError("sphere rule too small");
}

double BoundaryLimit::max_error() const {
  double m = mu.error();
  for (const auto& x : f) m = std::max(m, x.error());
  return m;
}

BoundaryLimit radial_limit(const PhotonField& field, double t, const RadialOptions& opts, bool parallel) {
  opts.validate();
  BoundaryLimit out;
  out.time = t;
  for (double r : opts.radii) out.samples.push_back(sphere_integrals(field, t, r, opts.n_theta, opts.n_phi, parallel));
  std::vector<cplx> v(opts.radii.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = out.samples[i].mu;
  out.mu = extrapolate(opts.radii, v, opts.fit);
  for (int k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = out.samples[i].f(k);
    out.f[k] = extrapolate(opts.radii, v, opts.fit);
  }
  return out;
}

AsymptoticBispinor AsymptoticBispinor::assemble(cplx mu, const CVec3& f) {
  AsymptoticBispinor a;
  a.mu = mu;
  a.f = f;
  Blocks b;
  b.phi_plus = I * pauli_dot(f);
  b.phi_minus = b.phi_plus.adjoint();
  b.chi_plus.setZero();
  b.chi_minus.setZero();
  a.psi_inf = photon::assemble(b);
  return a;
}

AsymptoticBispinor asymptotic_bispinor(const BoundaryLimit& limit) {
  return AsymptoticBispinor::assemble(limit.mu.limit, CVec3(limit.f[0].limit, limit.f[1].limit, limit.f[2].limit));
}

AsymptoticBispinor asymptotic_bispinor(const PhotonField& field, double t, const RadialOptions& opts, bool parallel) {
  return asymptotic_bispinor(radial_limit(field, t, opts, parallel));
}

GaugeInvarianceReport compare_boundary(const PhotonField& a, const PhotonField& b, double t,
                                       const RadialOptions& opts, bool parallel) {
  GaugeInvarianceReport r;
  r.before = radial_limit(a, t, opts, parallel);
  r.after = radial_limit(b, t, opts, parallel);
  r.delta_mu = std::abs(r.after.mu.limit - r.before.mu.limit);
  for (int k = 0; k < 3; ++k) r.delta_f(k) = std::abs(r.after.f[k].limit - r.before.f[k].limit);
  r.error_estimate = r.before.max_error() + r.after.max_error();
  return r;
}

GaugeInvarianceReport gauge_invariance_check(FieldPtr field, const GaugeFunction& gauge, double t,
                                             const RadialOptions& opts, bool parallel) {
  const FieldPtr transformed = gauge_transform(field, gauge);
  return compare_boundary(*field, *transformed, t, opts, parallel);
}

}  // namespace photon
