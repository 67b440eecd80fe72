#include "photon/currents.hpp"

#include "photon/errors.hpp"

namespace photon {

namespace {

// (1/4) tr of a 2x2 block, the (.)_S scalar part.
cplx scalar_s(const Quaternion& q) { return 0.25 * q.trace(); }

const Quaternion& sigma_or_one(int a) {
  static const Quaternion one = Quaternion::Identity();
  return a == 0 ? one : pauli(a);
}

}  // namespace

Bispinor Generator::matrix() const {
  Blocks b;
  b.phi_plus = g_plus;
  b.phi_minus = g_plus.adjoint();
  b.chi_minus = h_minus * Quaternion::Identity();
  b.chi_plus = h_plus * Quaternion::Identity();
  return assemble(b);
}

Generator Generator::basis(int k) {
  if (k < 0 || k >= kBasisSize) throw PreconditionError("generator basis index out of range");
  Generator g;
  if (k == 0) g.g_plus = 0.5 * Quaternion::Identity();
  else if (k == 1) g.g_plus = -0.5 * I * Quaternion::Identity();
  else if (k == 2) g.h_minus = 1.0;
  else if (k == 3) g.h_plus = 1.0;
  else if (k < 7) g.g_plus = 0.5 * pauli(k - 3);
  else g.g_plus = -0.5 * I * pauli(k - 6);
  return g;
}

bool is_admissible(const Bispinor& G, double tol) {
  if ((dirac_adjoint(G) - G).cwiseAbs().maxCoeff() > tol) return false;
  const Blocks b = split(G);
  for (const Quaternion* q : {&b.chi_plus, &b.chi_minus}) {
    const auto c = pauli_coords(*q);
    if (std::abs(c[1]) > tol || std::abs(c[2]) > tol || std::abs(c[3]) > tol) return false;
  }
  return true;
}

cplx riesz_trace(const Bispinor& psi, int mu, int nu) {
  return 0.25 * (dirac_adjoint(psi) * gamma(mu) * psi * gamma(nu)).trace();
}

double riesz_tensor(const Bispinor& psi, int mu, int nu) { return riesz_trace(psi, mu, nu).real(); }

double killing_current(const Bispinor& phi_diag, const FourVector& X, int mu) {
  if ((phi_diag - block_projection(phi_diag)).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + phi_diag.cwiseAbs().maxCoeff()))
    throw PreconditionError("killing_current expects a block-diagonal bispinor");
  return (0.25 * (dirac_adjoint(phi_diag) * gamma(mu) * phi_diag * gamma_of(X)).trace()).real();
}

FourVector killing_current(const Bispinor& phi_diag, const FourVector& X) {
  FourVector j;
  for (int mu = 0; mu < 4; ++mu) j(mu) = killing_current(phi_diag, X, mu);
  return j;
}

cplx noether_current(const Bispinor& psi, const Bispinor& G, int mu) {
  if (!is_admissible(G, 1e-12 * (1.0 + G.cwiseAbs().maxCoeff()))) throw PreconditionError("inadmissible generator");
  return 0.25 * (dirac_adjoint(psi) * gamma(mu) * psi * G).trace();
}

cplx noether_charge_density(const Bispinor& psi, const Generator& G) { return noether_current(psi, G.matrix(), 0); }

cplx charge_z(const Bispinor& psi) {
  const Blocks b = split(psi);
  return scalar_s(b.chi_minus.adjoint() * b.phi_plus + b.phi_minus.adjoint() * b.chi_plus);
}

double charge_r(const Bispinor& psi, Chirality c) {
  const Blocks b = split(psi);
  const Quaternion& chi = c == Chirality::Plus ? b.chi_plus : b.chi_minus;
  const Quaternion& phi = c == Chirality::Plus ? b.phi_plus : b.phi_minus;
  return 0.25 * (chi.squaredNorm() + phi.squaredNorm());
}

double charge_r_source(const Bispinor& psi, Chirality c, double m_over_hbar) {
  const Blocks b = split(psi);
  const Quaternion& chi = c == Chirality::Plus ? b.chi_plus : b.chi_minus;
  const Quaternion& phi = c == Chirality::Plus ? b.phi_plus : b.phi_minus;
  return -0.5 * m_over_hbar * (phi.adjoint() * chi).trace().imag();
}

CVec3 charge_J(const Bispinor& psi) {
  const Blocks b = split(psi);
  const Quaternion m = b.chi_minus.adjoint() * b.phi_plus + b.phi_minus.adjoint() * b.chi_plus;
  CVec3 J;
  for (int k = 0; k < 3; ++k) J(k) = scalar_s(m * pauli(k + 1));
  return J;
}

cplx charge_z_components(const Potentials& p_plus, const FieldVectors& f_plus, const Potentials& p_minus,
                         const FieldVectors& f_minus) {
  return 0.5 * (p_plus.a.dot(f_minus.b) - p_minus.a.dot(f_plus.b)) +
         0.5 * I * (p_minus.a.dot(f_plus.e) - p_plus.a.dot(f_minus.e));
}

double charge_r_components(const Potentials& p, const FieldVectors& f) {
  return 0.5 * (p.varphi * p.varphi + p.a.squaredNorm()) + 0.5 * (f.e.squaredNorm() + f.b.squaredNorm());
}

cplx green_current(const Bispinor& psi, const std::array<Bispinor, 4>& chi_grad, double hbar_over_m, int a, int mu) {
  if (a < 0 || a > 3 || mu < 0 || mu > 3) throw PreconditionError("green_current index out of range");
  const Blocks b = split(psi);
  const Blocks d = split(chi_grad[mu]);
  const Quaternion m = b.chi_minus.adjoint() * d.chi_plus - d.chi_minus.adjoint() * b.chi_plus;
  return I * hbar_over_m * scalar_s(m * sigma_or_one(a));
}

cplx green_current(const PhotonField& field, double t, const Vec3& s, int mu) {
  return green_current(field.value(t, s), field.chi_gradient(t, s), field.constants().hbar_over_m(), 0, mu);
}

cplx charge_K0(const PhotonField& field, double t, const Vec3& s) { return green_current(field, t, s, 0); }

CVec3 charge_K(const PhotonField& field, double t, const Vec3& s) {
  const Bispinor psi = field.value(t, s);
  const auto grad = field.chi_gradient(t, s);
  CVec3 K;
  for (int a = 1; a <= 3; ++a) K(a - 1) = green_current(psi, grad, field.constants().hbar_over_m(), a, 0);
  return K;
}

BornCurrent born_current(const Bispinor& psi, double C_phi) {
  const Blocks b = split(psi);
  BornCurrent out;
  out.rho = C_phi * (b.phi_plus.squaredNorm() + b.phi_minus.squaredNorm());
  if (!(out.rho > 0.0)) throw DomainError("Born velocity undefined where the density vanishes");
  for (int k = 0; k < 3; ++k) {
    const cplx j = (b.phi_plus.adjoint() * pauli(k + 1) * b.phi_plus - b.phi_minus.adjoint() * pauli(k + 1) * b.phi_minus)
                       .trace();
    out.v(k) = C_phi * j.real() / out.rho;
  }
  return out;
}

BornCurrent born_current(const PhotonField& field, double t, const Vec3& s, double C_phi) {
  return born_current(field.value(t, s), C_phi);
}

}  // namespace photon
