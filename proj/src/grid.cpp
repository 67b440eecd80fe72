#include "photon/grid.hpp"

#include <cmath>

#include <spdlog/spdlog.h>

#include "photon/errors.hpp"
#include "photon/fd.hpp"
#include "photon/kernels.hpp"
#include "photon/quadrature.hpp"

namespace photon {

namespace {

using kernels::kComponents;

// Central-difference spatial derivative d_k (k = 0..2) at an interior node.
Bispinor central(const GridSlab& u, int i, int j, int k, int axis) {
  const double h = u.spec().spacing();
  std::array<int, 3> p{i, j, k}, m{i, j, k};
  p[axis] += 1;
  m[axis] -= 1;
  return (u.at(p[0], p[1], p[2]) - u.at(m[0], m[1], m[2])) / (2.0 * h);
}

// sigma.grad acting on each 2x2 block (left multiplication).
Bispinor sigma_grad(const GridSlab& u, int i, int j, int k) {
  Bispinor out = Bispinor::Zero();
  for (int a = 0; a < 3; ++a) {
    const Bispinor d = central(u, i, j, k, a);
    for (int bi = 0; bi < 2; ++bi)
      for (int bj = 0; bj < 2; ++bj)
        out.block<2, 2>(2 * bi, 2 * bj) += pauli(a + 1) * d.block<2, 2>(2 * bi, 2 * bj);
  }
  return out;
}

void apply_boundary(GridSlab& u, double t, const BoundaryFn& bc) {
  const auto& g = u.spec();
  const int n = g.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (g.interior(i, j, k)) continue;
        u.at(i, j, k) = bc ? bc(t, g.node(i, j, k)) : Bispinor::Zero();
      }
}

}  // namespace

void GridSpec::validate() const {
  if (n < 4) throw PreconditionError("grid needs at least 4 nodes per side");
  if (!(half_width > 0.0)) throw PreconditionError("grid half width must be positive");
}

GridSlab::GridSlab(const GridSpec& spec) : spec_(spec), data_(spec.size() * kComponents, cplx(0.0)) {
  spec.validate();
}

Eigen::Map<Bispinor> GridSlab::at(int i, int j, int k) {
  return Eigen::Map<Bispinor>(data_.data() + kernels::node_index(spec_.n, i, j, k) * kComponents);
}

Eigen::Map<const Bispinor> GridSlab::at(int i, int j, int k) const {
  return Eigen::Map<const Bispinor>(data_.data() + kernels::node_index(spec_.n, i, j, k) * kComponents);
}

GridSlab sample_slab(const PhotonField& field, const GridSpec& spec, double t, bool parallel) {
  GridSlab out(spec);
  const int n = spec.n;
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.at(i, j, k) = field.value(t, spec.node(i, j, k));
  return out;
}

CompatibilityReport check_compatibility(const GridSlab& u) {
  const auto& g = u.spec();
  double tr = 0.0, phi_max = 0.0, div = 0.0, grad_scale = 0.0;
  for (int i = 1; i < g.n - 1; ++i)
    for (int j = 1; j < g.n - 1; ++j)
      for (int k = 1; k < g.n - 1; ++k) {
        const Blocks b = split(u.at(i, j, k));
        tr = std::max({tr, std::abs(b.phi_plus.trace()), std::abs(b.phi_minus.trace())});
        phi_max = std::max({phi_max, b.phi_plus.cwiseAbs().maxCoeff(), b.phi_minus.cwiseAbs().maxCoeff()});
        const Bispinor sg = sigma_grad(u, i, j, k);
        div = std::max({div, std::abs(sg.block<2, 2>(0, 0).trace()), std::abs(sg.block<2, 2>(2, 2).trace())});
        double gs = 0.0;
        for (int a = 0; a < 3; ++a) {
          const Bispinor d = central(u, i, j, k, a);
          gs += d.block<2, 2>(0, 0).cwiseAbs().sum() + d.block<2, 2>(2, 2).cwiseAbs().sum();
        }
        grad_scale = std::max(grad_scale, gs);
      }
  return {phi_max > 0.0 ? tr / phi_max : tr, grad_scale > 0.0 ? div / grad_scale : div};
}

GridField cauchy_evolve(GridSlab data, double t0, double T, const PhysicalConstants& c,
                        const CauchyOptions& opts) {
  c.validate();
  if (!(opts.cfl > 0.0) || opts.cfl > 0.5) throw PreconditionError("CFL number must be in (0, 0.5]");
  if (!(T > 0.0)) throw PreconditionError("evolution time must be positive");
  const auto compat = check_compatibility(data);
  if (compat.trace_defect > opts.compat_tol || compat.divergence_defect > opts.compat_tol)
    throw PreconditionError("incompatible Cauchy data (trace defect " + std::to_string(compat.trace_defect) +
                            ", divergence defect " + std::to_string(compat.divergence_defect) + ")");

  const GridSpec g = data.spec();
  const int n = g.n;
  const double h = g.spacing();
  const int steps = static_cast<int>(std::ceil(T / (opts.cfl * h) - 1e-12));
  const double dt = T / steps;
  const double lambda2 = (dt / h) * (dt / h);
  const double mass = c.m_photon / c.hbar;
  spdlog::debug("cauchy_evolve: n={} h={} dt={} steps={}", n, h, dt, steps);

  auto laplacian = opts.parallel ? kernels::laplacian_omp : kernels::laplacian_serial;
  auto leapfrog = opts.parallel ? kernels::leapfrog_update_omp : kernels::leapfrog_update_serial;

  // First step: u1 = u0 + dt v0 + dt^2/2 lap u0, with v0 from the first-order system.
  GridSlab cur = std::move(data);
  GridSlab next(g);
  laplacian(cur.data(), next.data(), n, 0.5 * dt * dt / (h * h));
#pragma omp parallel for collapse(2) schedule(static) if (opts.parallel)
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k < n - 1; ++k) {
        const Blocks u = split(cur.at(i, j, k));
        const Blocks sg = split(sigma_grad(cur, i, j, k));
        Blocks v;
        v.phi_plus = -sg.phi_plus;
        v.phi_minus = sg.phi_minus;
        v.chi_plus = -I * mass * u.phi_plus + sg.chi_plus;
        v.chi_minus = -I * mass * u.phi_minus - sg.chi_minus;
        next.at(i, j, k) += cur.at(i, j, k) + dt * assemble(v);
      }
  apply_boundary(next, t0 + dt, opts.boundary);

  // Leapfrog: prev <- 2 cur - prev + lambda^2 lap cur, then swap.
  GridSlab prev = std::move(cur);
  cur = std::move(next);
  for (int s = 1; s < steps; ++s) {
    leapfrog(cur.data(), prev.data(), n, lambda2);
    apply_boundary(prev, t0 + (s + 1) * dt, opts.boundary);
    std::swap(prev, cur);
  }

  // v = (u^N - u^{N-1})/dt + dt/2 lap u^N, written over the previous level.
  GridSlab lap(g);
  laplacian(cur.data(), lap.data(), n, 1.0 / (h * h));
  const std::size_t total = g.size() * kComponents;
  cplx* pv = prev.data();
  const cplx* pu = cur.data();
  const cplx* pl = lap.data();
  for (std::size_t q = 0; q < total; ++q) pv[q] = (pu[q] - pv[q]) / dt + 0.5 * dt * pl[q];
  return GridField(std::move(cur), std::move(prev), t0 + steps * dt, c, steps);
}

GridField::GridField(GridSlab value, GridSlab time_derivative, double time, PhysicalConstants c, int steps)
    : PhotonField(c), u_(std::move(value)), v_(std::move(time_derivative)), time_(time), steps_(steps) {}

std::array<Bispinor, 4> GridField::node_gradient(int i, int j, int k) const {
  if (!spec().interior(i, j, k)) throw DomainError("stencil exits the grid");
  return {Bispinor(v_.at(i, j, k)), central(u_, i, j, k, 0), central(u_, i, j, k, 1), central(u_, i, j, k, 2)};
}

Bispinor GridField::node_residual(int i, int j, int k) const {
  const auto d = node_gradient(i, j, k);
  Bispinor dslash = Bispinor::Zero();
  for (int mu = 0; mu < 4; ++mu) dslash += gamma(mu) * d[mu];
  return -I * constants_.hbar * dslash + constants_.m_photon * block_projection(node_value(i, j, k));
}

std::array<int, 3> GridField::locate(double t, const Vec3& s) const {
  const double h = spec().spacing();
  if (std::abs(t - time_) > 1e-12 * std::max(1.0, std::abs(time_)))
    throw DomainError("grid field is only available at its slab time");
  std::array<int, 3> idx;
  for (int a = 0; a < 3; ++a) {
    const double x = (s(a) + spec().half_width) / h - 0.5;
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-6 || r < 0 || r > spec().n - 1) throw DomainError("point is not a grid node");
    idx[a] = static_cast<int>(r);
  }
  return idx;
}

Bispinor GridField::value(double t, const Vec3& s) const {
  const auto p = locate(t, s);
  return node_value(p[0], p[1], p[2]);
}

std::array<Bispinor, 4> GridField::chi_gradient(double t, const Vec3& s) const {
  const auto p = locate(t, s);
  auto d = node_gradient(p[0], p[1], p[2]);
  for (auto& x : d) x = off_diagonal(x);
  return d;
}

GridField sample_grid_field(const PhotonField& field, const GridSpec& spec, double t, double dt_step, bool parallel) {
  GridSlab u = sample_slab(field, spec, t, parallel);
  GridSlab v(spec);
  const int n = spec.n;
  auto f = [&field](double tt, const Vec3& x) { return field.value(tt, x); };
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) v.at(i, j, k) = fd_derivative(f, t, spec.node(i, j, k), 0, dt_step);
  return GridField(std::move(u), std::move(v), t, field.constants(), 0);
}

GridError grid_error(const GridField& grid, const PhotonField& reference, bool parallel) {
  const auto& g = grid.spec();
  const int n = g.n;
  std::vector<double> err(g.size(), 0.0), ref(g.size(), 0.0);
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k < n - 1; ++k) {
        const Bispinor r = reference.value(grid.time(), g.node(i, j, k));
        const std::size_t q = kernels::node_index(n, i, j, k);
        err[q] = (grid.node_value(i, j, k) - r).squaredNorm();
        ref[q] = r.squaredNorm();
      }
  const double dv = std::pow(g.spacing(), 3);
  return {std::sqrt(pairwise_sum(err) * dv), std::sqrt(pairwise_sum(ref) * dv)};
}

}  // namespace photon
