#include "photon/spinor_forms.hpp"

#include <cmath>

#include "photon/errors.hpp"

namespace photon {

namespace {

const Quaternion& sigma_bar(int mu, bool primed) {
  static const std::array<Quaternion, 4> sp = {pauli(0), -pauli(1), -pauli(2), -pauli(3)};
  return primed ? sp[mu] : pauli(mu);
}

Vec3 unit_axis(const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) throw PreconditionError("axis must be a unit vector");
  return n;
}

double levi_civita(int i, int j, int k) {
  return 0.5 * (i - j) * (j - k) * (k - i);
}

}  // namespace

double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

FourVector lower(const FourVector& x) { return {x(0), -x(1), -x(2), -x(3)}; }

Quaternion sigma_map(const FourVector& a, bool primed) { return sigma_map(CFourVector(a.cast<cplx>()), primed); }

Quaternion sigma_map(const CFourVector& a, bool primed) {
  Quaternion q = Quaternion::Zero();
  for (int mu = 0; mu < 4; ++mu) q += a(mu) * sigma_bar(mu, primed);
  return q;
}

CFourVector sigma_inverse(const Quaternion& q, bool primed) {
  auto c = pauli_coords(q);
  CFourVector a(c[0], c[1], c[2], c[3]);
  if (primed) a.tail<3>() = -a.tail<3>();
  return a;
}

Bispinor gamma_of(const FourVector& x) {
  Bispinor g = Bispinor::Zero();
  for (int mu = 0; mu < 4; ++mu) g += x(mu) * gamma_lower(mu);
  return g;
}

Quaternion Sigma_map(const TwoForm& F, bool primed) {
  if ((F + F.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + F.cwiseAbs().maxCoeff()))
    throw PreconditionError("Sigma_map requires an antisymmetric two-form");
  Quaternion q = Quaternion::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (F(mu, nu) != 0.0) q += F(mu, nu) * sigma_bar(mu, primed) * sigma_bar(nu, !primed);
  return 0.25 * I * q;
}

TwoForm two_form_from_fields(const FieldVectors& fv) {
  TwoForm F = TwoForm::Zero();
  for (int k = 0; k < 3; ++k) {
    F(0, k + 1) = -2.0 * fv.e(k);
    F(k + 1, 0) = 2.0 * fv.e(k);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) F(i + 1, j + 1) += -2.0 * levi_civita(i, j, k) * fv.b(k);
  return F;
}

Quaternion phi_from_fields(const FieldVectors& fv, Chirality c) {
  const CVec3 e = fv.e.cast<cplx>(), b = fv.b.cast<cplx>();
  return c == Chirality::Plus ? Quaternion(I * pauli_dot(CVec3(e + I * b)))
                              : Quaternion(-I * pauli_dot(CVec3(e - I * b)));
}

FieldVectors fields_from_phi(const Quaternion& phi, Chirality c) {
  auto k = pauli_coords(phi);
  CVec3 v(k[1], k[2], k[3]);
  FieldVectors fv;
  if (c == Chirality::Plus) {  // v = i(e + ib)
    CVec3 w = -I * v;
    fv.e = w.real();
    fv.b = w.imag();
  } else {  // v = -i(e - ib)
    CVec3 w = I * v;
    fv.e = w.real();
    fv.b = -w.imag();
  }
  return fv;
}

Quaternion chi_from_potentials(const Potentials& p, Chirality c) {
  const double sign = c == Chirality::Plus ? -1.0 : 1.0;
  return Quaternion(p.varphi * Quaternion::Identity() + sign * pauli_dot(p.a));
}

Potentials potentials_from_chi(const Quaternion& chi, Chirality c) {
  auto k = pauli_coords(chi);
  const double sign = c == Chirality::Plus ? -1.0 : 1.0;
  return {k[0].real(), sign * Vec3(k[1].real(), k[2].real(), k[3].real())};
}

LorentzElement LorentzElement::operator*(const LorentzElement& other) const {
  if (kind != Kind::Proper || other.kind != Kind::Proper)
    throw PreconditionError("composition is defined for proper elements only");
  return {A * other.A, Kind::Proper};
}

LorentzElement spin_half_rotation(const Vec3& axis, double angle) {
  const Vec3 n = unit_axis(axis);
  Quaternion A = std::cos(0.5 * angle) * Quaternion::Identity() - I * std::sin(0.5 * angle) * pauli_dot(n);
  return {A, LorentzElement::Kind::Proper};
}

LorentzElement spin_half_boost(const Vec3& axis, double rapidity) {
  const Vec3 n = unit_axis(axis);
  Quaternion A = std::cosh(0.5 * rapidity) * Quaternion::Identity() + std::sinh(0.5 * rapidity) * pauli_dot(n);
  return {A, LorentzElement::Kind::Proper};
}

Bispinor spinor_matrix(const LorentzElement& L) {
  switch (L.kind) {
    case LorentzElement::Kind::Proper: {
      Bispinor m = Bispinor::Zero();
      m.block<2, 2>(0, 0) = L.A;
      m.block<2, 2>(2, 2) = L.A.inverse().adjoint();
      return m;
    }
    case LorentzElement::Kind::Parity:
      return gamma(0);
    case LorentzElement::Kind::TimeReversal:
      break;
  }
  throw PreconditionError("time reversal is anti-linear and has no matrix representative");
}

Eigen::Matrix4d vector_action(const LorentzElement& L) {
  switch (L.kind) {
    case LorentzElement::Kind::Proper: {
      // sigma(Lambda x) = A sigma(x) A^dagger; components recovered with (1/2) tr(sigma_mu .)
      Eigen::Matrix4d m;
      for (int nu = 0; nu < 4; ++nu) {
        Quaternion img = L.A * pauli(nu) * L.A.adjoint();
        auto c = pauli_coords(img);
        for (int mu = 0; mu < 4; ++mu) m(mu, nu) = c[mu].real();
      }
      return m;
    }
    case LorentzElement::Kind::Parity:
      return Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
    case LorentzElement::Kind::TimeReversal:
      return Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();
  }
  return Eigen::Matrix4d::Identity();
}

Bispinor lorentz_act(const LorentzElement& L, const Bispinor& psi) {
  switch (L.kind) {
    case LorentzElement::Kind::Proper: {
      Bispinor m = spinor_matrix(L);
      Bispinor minv = Bispinor::Zero();
      minv.block<2, 2>(0, 0) = L.A.inverse();
      minv.block<2, 2>(2, 2) = L.A.adjoint();
      return m * psi * minv;
    }
    case LorentzElement::Kind::Parity:
      return gamma(0) * psi * gamma(0);
    case LorentzElement::Kind::TimeReversal: {
      Bispinor s2 = Bispinor::Zero();
      s2.block<2, 2>(0, 0) = pauli(2);
      s2.block<2, 2>(2, 2) = pauli(2);
      return s2 * psi.conjugate() * s2;
    }
  }
  return psi;
}

Blocks transform_blocks(const Quaternion& A, const Blocks& b) {
  const Quaternion Ainv = A.inverse();
  const Quaternion Ainv_dag = Ainv.adjoint();
  return {A * b.phi_plus * Ainv, A * b.chi_minus * A.adjoint(), Ainv_dag * b.chi_plus * Ainv,
          Ainv_dag * b.phi_minus * A.adjoint()};
}

}  // namespace photon
