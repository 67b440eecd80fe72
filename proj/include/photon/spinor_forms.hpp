#pragma once

#include "photon/clifford.hpp"

namespace photon {

using FourVector = Eigen::Vector4d;    // contravariant components (x0, x1, x2, x3)
using CFourVector = Eigen::Vector4cd;
using TwoForm = Eigen::Matrix4d;       // antisymmetric contravariant F^{mu nu}

double minkowski_dot(const FourVector& a, const FourVector& b);
FourVector lower(const FourVector& x);

enum class Chirality { Plus, Minus };

// sigma(A) = sigma_mu A^mu, sigma'(A) = sigma'_mu A^mu with sigma'_k = -sigma_k.
Quaternion sigma_map(const FourVector& a, bool primed = false);
Quaternion sigma_map(const CFourVector& a, bool primed = false);
CFourVector sigma_inverse(const Quaternion& q, bool primed = false);

// gamma(x) = gamma_mu x^mu = (0, sigma(x); sigma'(x), 0).
Bispinor gamma_of(const FourVector& x);

// Sigma(F) = (i/4) sigma_mu sigma'_nu F^{mu nu}; Sigma' swaps the roles.
Quaternion Sigma_map(const TwoForm& F, bool primed = false);

struct FieldVectors {
  Vec3 e = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  CVec3 complex() const { return e.cast<cplx>() + I * b.cast<cplx>(); }
};

struct Potentials {
  double varphi = 0.0;
  Vec3 a = Vec3::Zero();
};

// F^{0k} = -2 e_k, F^{ij} = -2 eps_ijk b_k: the normalization for which Sigma(F) = phi+ and Sigma'(F) = phi-.
TwoForm two_form_from_fields(const FieldVectors& fv);

// phi+ = i sigma.(e + i b), phi- = -i sigma.(e - i b).
Quaternion phi_from_fields(const FieldVectors& fv, Chirality c);
FieldVectors fields_from_phi(const Quaternion& phi, Chirality c);

// chi+ = varphi - sigma.a, chi- = varphi + sigma.a.
Quaternion chi_from_potentials(const Potentials& p, Chirality c);
// Hermitian part of chi read back as real potentials.
Potentials potentials_from_chi(const Quaternion& chi, Chirality c);

struct LorentzElement {
  enum class Kind { Proper, Parity, TimeReversal };
  Quaternion A = Quaternion::Identity();  // SL(2,C) element for proper transformations
  Kind kind = Kind::Proper;

  static LorentzElement identity() { return {}; }
  static LorentzElement parity() { return {Quaternion::Identity(), Kind::Parity}; }
  static LorentzElement time_reversal() { return {Quaternion::Identity(), Kind::TimeReversal}; }

  // Composition of proper elements (this after other).
  LorentzElement operator*(const LorentzElement& other) const;
};

// A = exp(-i theta n.sigma / 2).
LorentzElement spin_half_rotation(const Vec3& axis, double angle);
// A = exp(rapidity n.sigma / 2).
LorentzElement spin_half_boost(const Vec3& axis, double rapidity);

// L = diag(A, A^{-dagger}) for proper, gamma^0 for parity. Time reversal is anti-linear and has no matrix.
Bispinor spinor_matrix(const LorentzElement& L);

// The vector transformation Lambda with gamma(Lambda x) = L gamma(x) L^{-1}.
Eigen::Matrix4d vector_action(const LorentzElement& L);

// L psi L^{-1}; parity gamma^0 psi gamma^0; time reversal S2 conj(psi) S2 with S2 = diag(sigma2, sigma2).
Bispinor lorentz_act(const LorentzElement& L, const Bispinor& psi);

// Block-wise form of the proper action: phi+ -> A phi+ A^{-1}, chi- -> A chi- A^dagger, etc.
Blocks transform_blocks(const Quaternion& A, const Blocks& b);

}  // namespace photon
