#pragma once

#include <array>
#include <string>

#include "photon/field.hpp"

namespace photon {

// Admissible Noether generator G = (g+, h- 1; h+ 1, g+^dagger), h_pm real.
struct Generator {
  Quaternion g_plus = Quaternion::Zero();
  double h_plus = 0.0;
  double h_minus = 0.0;

  Bispinor matrix() const;
  Generator operator+(const Generator& o) const { return {g_plus + o.g_plus, h_plus + o.h_plus, h_minus + o.h_minus}; }
  Generator operator*(double s) const { return {s * g_plus, s * h_plus, s * h_minus}; }

  static constexpr int kBasisSize = 10;
  // Real basis, scaled so that the density of basis(k) is exactly charge k of NoetherCharge:
  // Re z, Im z, r+, r-, Re J1..3, Im J1..3.
  static Generator basis(int k);
};

// dirac_adjoint(G) = G and scalar off-diagonal blocks, to tolerance.
bool is_admissible(const Bispinor& G, double tol = 1e-12);

// tau^{mu nu} = (1/4) tr(psi-bar gamma^mu psi gamma^nu); the complex trace is exposed for realness checks.
cplx riesz_trace(const Bispinor& psi, int mu, int nu);
double riesz_tensor(const Bispinor& psi, int mu, int nu);

// j_X^mu = (1/4) tr(phi-bar gamma^mu phi gamma(X)); phi must be block diagonal.
double killing_current(const Bispinor& phi_diag, const FourVector& X, int mu);
FourVector killing_current(const Bispinor& phi_diag, const FourVector& X);

// j_G^mu = (1/4) tr(psi-bar gamma^mu psi G); conserved as d_t j^0 + d_k j^k = 0.
cplx noether_current(const Bispinor& psi, const Bispinor& G, int mu);
cplx noether_charge_density(const Bispinor& psi, const Generator& G);

// z = (1/4) tr(chi-^dag phi+ + phi-^dag chi+), r_pm, J_k = (1/4) tr((chi-^dag phi+ + phi-^dag chi+) sigma_k).
cplx charge_z(const Bispinor& psi);
double charge_r(const Bispinor& psi, Chirality c);
CVec3 charge_J(const Bispinor& psi);

// On solutions the r_pm currents are not source-free: the mass term couples phi_pm to chi_pm and
// d_mu j^mu_{r_pm} = -(m/2hbar) Im tr(phi_pm^dag chi_pm) = -(m/hbar) e_pm.a_pm (for varphi-free chi).
double charge_r_source(const Bispinor& psi, Chirality c, double m_over_hbar);

// The same densities written with potentials and field vectors of both chiralities.
cplx charge_z_components(const Potentials& p_plus, const FieldVectors& f_plus, const Potentials& p_minus,
                         const FieldVectors& f_minus);
double charge_r_components(const Potentials& p, const FieldVectors& f);

// K^{(a)}_mu = (i hbar/m) [(chi-^dag d_mu chi+ - d_mu chi-^dag chi+) sigma_a]_S with sigma_0 = 1;
// a = 0 is K_mu, a = 1..3 the currents of the vector charge K. Conserved as d_t K_0 - d_k K_k = 0.
cplx green_current(const Bispinor& psi, const std::array<Bispinor, 4>& chi_grad, double hbar_over_m, int a, int mu);
cplx green_current(const PhotonField& field, double t, const Vec3& s, int mu);
cplx charge_K0(const PhotonField& field, double t, const Vec3& s);
CVec3 charge_K(const PhotonField& field, double t, const Vec3& s);

// Born-rule density and velocity: rho = C tr(phi^dag phi), v^k = j^k / rho.
struct BornCurrent {
  double rho = 0.0;
  Vec3 v = Vec3::Zero();
  Vec3 flux() const { return rho * v; }
};
BornCurrent born_current(const Bispinor& psi, double C_phi);
BornCurrent born_current(const PhotonField& field, double t, const Vec3& s, double C_phi);

}  // namespace photon
