#pragma once

#include <array>
#include <memory>
#include <vector>

#include "photon/multipole.hpp"
#include "photon/spinor_forms.hpp"

namespace photon {

struct PhysicalConstants {
  double hbar = 1.0;
  double m_photon = 1.0;

  void validate() const;
  double hbar_over_m() const { return hbar / m_photon; }
};

// A photon wave function: a bispinor-valued field on Minkowski space.
class PhotonField {
 public:
  explicit PhotonField(PhysicalConstants c = {});
  virtual ~PhotonField() = default;

  virtual Bispinor value(double t, const Vec3& s) const = 0;

  // d_mu of the off-diagonal (chi) part, mu = 0..3. Default: fourth-order central differences.
  virtual std::array<Bispinor, 4> chi_gradient(double t, const Vec3& s) const;

  const PhysicalConstants& constants() const { return constants_; }

 protected:
  PhysicalConstants constants_;
  double gradient_step_ = 1e-3;
};

using FieldPtr = std::shared_ptr<const PhotonField>;

// Off-diagonal part (1 - Pi) psi.
Bispinor off_diagonal(const Bispinor& psi);

class ZeroField final : public PhotonField {
 public:
  using PhotonField::PhotonField;
  Bispinor value(double, const Vec3&) const override { return Bispinor::Zero(); }
  std::array<Bispinor, 4> chi_gradient(double, const Vec3&) const override;
};

// Analytic backend: Coulomb-gauge potentials a_pm built from multipole modes, varphi_pm = 0.
class MultipoleField final : public PhotonField {
 public:
  MultipoleField(std::vector<MultipoleMode> plus, std::vector<MultipoleMode> minus, PhysicalConstants c = {});

  Bispinor value(double t, const Vec3& s) const override;
  std::array<Bispinor, 4> chi_gradient(double t, const Vec3& s) const override;

  MultipoleMode::Sample potential(Chirality c, double t, const Vec3& s) const;
  FieldVectors fields(Chirality c, double t, const Vec3& s) const;

  // Deliberate defect for negative controls: scales b_+ (breaks the component system).
  void set_b_plus_scale(double k) { b_plus_scale_ = k; }

  const std::vector<MultipoleMode>& modes(Chirality c) const { return c == Chirality::Plus ? plus_ : minus_; }

 private:
  std::vector<MultipoleMode> plus_, minus_;
  double b_plus_scale_ = 1.0;
};

// psi'(x) = L psi(Lambda^{-1} x) L^{-1}; for time reversal psi'(t, s) = S2 conj(psi(-t, s)) S2.
class LorentzTransformedField final : public PhotonField {
 public:
  LorentzTransformedField(FieldPtr base, LorentzElement L);
  Bispinor value(double t, const Vec3& s) const override;

 private:
  FieldPtr base_;
  LorentzElement L_;
  Eigen::Matrix4d inverse_;
};

// Adds a static, non-wave potential perturbation delta a_+ = eps P(s)/|s|^(deg P + 1) to chi_+.
class PerturbedField final : public PhotonField {
 public:
  PerturbedField(FieldPtr base, VecPoly P, double eps);
  Bispinor value(double t, const Vec3& s) const override;

 private:
  FieldPtr base_;
  VecPoly P_;
  double eps_;
  int deg_;
};

// The example field: a_+ from P1 with profile f1, a_- from P2 with profile f2.
std::shared_ptr<MultipoleField> paper_example_field(const PhysicalConstants& c, const Profile& f1, const Profile& f2);

}  // namespace photon
