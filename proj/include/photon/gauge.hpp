#pragma once

#include "photon/field.hpp"

namespace photon {

// Spherical d'Alembert solution h(t, s) = (F(t - r) - F(t + r))/r, r = |s - center|.
struct SphericalWave {
  Profile F;
  Vec3 center = Vec3::Zero();

  struct Sample {
    double h = 0.0;
    Eigen::Vector4d dh = Eigen::Vector4d::Zero();   // (d_t, d_1, d_2, d_3)
    Eigen::Matrix4d ddh = Eigen::Matrix4d::Zero();  // second derivatives in the same order
  };
  Sample sample(double t, const Vec3& s) const;
  bool is_zero() const { return F.kind == Profile::Kind::Zero; }
};

struct GaugeFunction {
  SphericalWave h_plus, h_minus;

  // Largest relative wave-equation residual |h_tt - lap h| / (|h_tt| + |lap h|); event positions are
  // offsets from each wave's center.
  double wave_residual(const std::vector<std::pair<double, Vec3>>& events) const;
};

// chi_+ -> chi_+ + D_+ h_+, chi_- -> chi_- + D_- h_-; phi_pm untouched.
class GaugeTransformedField final : public PhotonField {
 public:
  GaugeTransformedField(FieldPtr base, GaugeFunction gauge);
  Bispinor value(double t, const Vec3& s) const override;
  std::array<Bispinor, 4> chi_gradient(double t, const Vec3& s) const override;

 private:
  FieldPtr base_;
  GaugeFunction gauge_;
};

// Validates the wave equation at sample events (tolerance tol) and returns the transformed field.
FieldPtr gauge_transform(FieldPtr field, const GaugeFunction& gauge, double tol = 1e-6);

}  // namespace photon
