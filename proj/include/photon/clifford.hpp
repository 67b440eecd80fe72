#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

namespace photon {

using cplx = std::complex<double>;
using Bispinor = Eigen::Matrix4cd;    // element of the complexified Clifford algebra
using Quaternion = Eigen::Matrix2cd;  // complex quaternion, 2x2 block of a bispinor
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr cplx I{0.0, 1.0};

// Minkowski metric diag(1,-1,-1,-1).
inline constexpr double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

// Pauli matrices; pauli(0) is the identity.
const Quaternion& pauli(int k);

// sigma . v for a (real or complex) 3-vector.
Quaternion pauli_dot(const Vec3& v);
Quaternion pauli_dot(const CVec3& v);

// Coordinates of q in {sigma_0, sigma_1, sigma_2, sigma_3}: q = c0 + c.sigma.
std::array<cplx, 4> pauli_coords(const Quaternion& q);

// Weyl-representation gamma matrices.
const Bispinor& gamma(int mu);
const Bispinor& gamma5();
Bispinor gamma_lower(int mu);  // gamma_mu = eta_{mu mu} gamma^mu

// (1/4) trace.
cplx scalar_part(const Bispinor& a);

Bispinor dirac_adjoint(const Bispinor& a);

struct ChiralProjections {
  Bispinor plus, minus;
};
const ChiralProjections& chiral_projections();

// Pi_+ psi Pi_+ + Pi_- psi Pi_-: keeps phi_pm, zeroes chi_pm.
Bispinor block_projection(const Bispinor& psi);

// Block view (phi+, chi-; chi+, phi-).
struct Blocks {
  Quaternion phi_plus = Quaternion::Zero();
  Quaternion chi_minus = Quaternion::Zero();
  Quaternion chi_plus = Quaternion::Zero();
  Quaternion phi_minus = Quaternion::Zero();
};
Blocks split(const Bispinor& psi);
Bispinor assemble(const Blocks& b);

// Index of a basis element gamma^{i1}...gamma^{ik}, i1 < ... < ik.
struct BasisIndex {
  int grade = 0;
  std::array<int, 4> indices{};  // first `grade` entries used

  bool operator==(const BasisIndex& o) const;
  std::string label() const;  // e.g. "1", "g0", "g0g1g2g3"
};

// The 16 basis elements in grade order.
const std::array<BasisIndex, 16>& basis_indices();
Bispinor basis_element(const BasisIndex& idx);

struct BasisExpansion {
  std::array<cplx, 16> coefficients{};  // aligned with basis_indices()
  cplx operator[](const BasisIndex& idx) const;
};

BasisExpansion basis_expand(const Bispinor& a);
Bispinor basis_synthesize(const BasisExpansion& e);

}  // namespace photon
