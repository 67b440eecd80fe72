#pragma once

#include <functional>
#include <vector>

#include "photon/field.hpp"

namespace photon {

// Cell-centred cubic grid on [-L, L]^3 with n nodes per side (the origin is never a node).
struct GridSpec {
  int n = 32;
  double half_width = 1.0;

  double spacing() const { return 2.0 * half_width / n; }
  double coordinate(int i) const { return -half_width + (i + 0.5) * spacing(); }
  Vec3 node(int i, int j, int k) const { return {coordinate(i), coordinate(j), coordinate(k)}; }
  std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
  bool interior(int i, int j, int k) const { return i > 0 && j > 0 && k > 0 && i < n - 1 && j < n - 1 && k < n - 1; }
  void validate() const;
};

// One bispinor per node, stored contiguously (16 complex numbers per node).
class GridSlab {
 public:
  GridSlab() = default;
  explicit GridSlab(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  Eigen::Map<Bispinor> at(int i, int j, int k);
  Eigen::Map<const Bispinor> at(int i, int j, int k) const;
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

 private:
  GridSpec spec_;
  std::vector<cplx> data_;
};

GridSlab sample_slab(const PhotonField& field, const GridSpec& spec, double t, bool parallel = true);

// Relative defects of the constraints tr phi = 0 and tr((sigma.grad) phi) = 0 (central differences).
struct CompatibilityReport {
  double trace_defect = 0.0;
  double divergence_defect = 0.0;
};
CompatibilityReport check_compatibility(const GridSlab& data);

using BoundaryFn = std::function<Bispinor(double, const Vec3&)>;

struct CauchyOptions {
  double cfl = 0.5;             // dt / dx, must be in (0, 0.5]
  double compat_tol = 5e-2;     // tolerance for check_compatibility
  BoundaryFn boundary;          // Dirichlet values on the outer node layer; empty: zero
  bool parallel = true;
};

class GridField;

// Evolves every component with the scalar wave equation from data at t0 to t0 + T,
// with the initial time derivatives of the first-order system; second-order leapfrog.
GridField cauchy_evolve(GridSlab data, double t0, double T, const PhysicalConstants& c,
                        const CauchyOptions& opts = {});

// Grid backend: the evolved slab and its time derivative at a single time.
class GridField final : public PhotonField {
 public:
  GridField(GridSlab value, GridSlab time_derivative, double time, PhysicalConstants c, int steps);

  const GridSpec& spec() const { return u_.spec(); }
  double time() const { return time_; }
  int steps() const { return steps_; }
  const GridSlab& slab() const { return u_; }

  Bispinor node_value(int i, int j, int k) const { return u_.at(i, j, k); }
  // Time derivative, then second-order central spatial derivatives; interior nodes only.
  std::array<Bispinor, 4> node_gradient(int i, int j, int k) const;
  Bispinor node_residual(int i, int j, int k) const;

  // Evaluation is restricted to grid nodes at the slab time.
  Bispinor value(double t, const Vec3& s) const override;
  std::array<Bispinor, 4> chi_gradient(double t, const Vec3& s) const override;

 private:
  std::array<int, 3> locate(double t, const Vec3& s) const;

  GridSlab u_, v_;
  double time_;
  int steps_;
};

// Samples a field and its time derivative (fourth-order FD with step dt_step) into a grid field at time t.
GridField sample_grid_field(const PhotonField& field, const GridSpec& spec, double t, double dt_step = 1e-3,
                            bool parallel = true);

struct GridError {
  double error_l2 = 0.0;      // sqrt(sum |u - ref|^2 dx^3)
  double reference_l2 = 0.0;  // sqrt(sum |ref|^2 dx^3)
  double relative() const { return reference_l2 > 0.0 ? error_l2 / reference_l2 : error_l2; }
};
// L2 difference over interior nodes against a reference field at the slab time.
GridError grid_error(const GridField& grid, const PhotonField& reference, bool parallel = true);

}  // namespace photon
