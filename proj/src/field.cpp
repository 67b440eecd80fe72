#include "photon/field.hpp"

#include <cmath>

#include "photon/errors.hpp"
#include "photon/fd.hpp"

namespace photon {

namespace {

Vec3 curl(const Eigen::Matrix3d& grad) {
  // grad(i, j) = d_j a_i
  return {grad(2, 1) - grad(1, 2), grad(0, 2) - grad(2, 0), grad(1, 0) - grad(0, 1)};
}

void add_sample(MultipoleMode::Sample& acc, const MultipoleMode::Sample& s) {
  acc.a += s.a;
  acc.a_t += s.a_t;
  acc.grad += s.grad;
}

}  // namespace

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0) || !(m_photon > 0.0) || !std::isfinite(hbar) || !std::isfinite(m_photon))
    throw PreconditionError("hbar and m_photon must be positive and finite");
}

PhotonField::PhotonField(PhysicalConstants c) : constants_(c) { constants_.validate(); }

std::array<Bispinor, 4> PhotonField::chi_gradient(double t, const Vec3& s) const {
  auto chi = [this](double tt, const Vec3& x) { return off_diagonal(value(tt, x)); };
  std::array<Bispinor, 4> out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = fd_derivative(chi, t, s, mu, gradient_step_);
  return out;
}

Bispinor off_diagonal(const Bispinor& psi) { return psi - block_projection(psi); }

std::array<Bispinor, 4> ZeroField::chi_gradient(double, const Vec3&) const {
  return {Bispinor::Zero(), Bispinor::Zero(), Bispinor::Zero(), Bispinor::Zero()};
}

MultipoleField::MultipoleField(std::vector<MultipoleMode> plus, std::vector<MultipoleMode> minus, PhysicalConstants c)
    : PhotonField(c), plus_(std::move(plus)), minus_(std::move(minus)) {
  for (const auto& m : plus_) m.validate();
  for (const auto& m : minus_) m.validate();
}

MultipoleMode::Sample MultipoleField::potential(Chirality c, double t, const Vec3& s) const {
  MultipoleMode::Sample acc;
  for (const auto& m : modes(c)) add_sample(acc, m.sample(t, s));
  return acc;
}

FieldVectors MultipoleField::fields(Chirality c, double t, const Vec3& s) const {
  const auto p = potential(c, t, s);
  const double k = constants_.hbar_over_m();
  FieldVectors fv{-k * p.a_t, k * curl(p.grad)};
  if (c == Chirality::Plus) fv.b *= b_plus_scale_;
  return fv;
}

Bispinor MultipoleField::value(double t, const Vec3& s) const {
  if (!(s.norm() > 0.0)) throw DomainError("the multipole backend is singular at s = 0");
  const auto pp = potential(Chirality::Plus, t, s);
  const auto pm = potential(Chirality::Minus, t, s);
  const double k = constants_.hbar_over_m();
  Blocks b;
  b.phi_plus = phi_from_fields({-k * pp.a_t, b_plus_scale_ * k * curl(pp.grad)}, Chirality::Plus);
  b.phi_minus = phi_from_fields({-k * pm.a_t, k * curl(pm.grad)}, Chirality::Minus);
  b.chi_plus = chi_from_potentials({0.0, pp.a}, Chirality::Plus);
  b.chi_minus = chi_from_potentials({0.0, pm.a}, Chirality::Minus);
  return assemble(b);
}

std::array<Bispinor, 4> MultipoleField::chi_gradient(double t, const Vec3& s) const {
  if (!(s.norm() > 0.0)) throw DomainError("the multipole backend is singular at s = 0");
  const auto pp = potential(Chirality::Plus, t, s);
  const auto pm = potential(Chirality::Minus, t, s);
  std::array<Bispinor, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    const Vec3 dp = mu == 0 ? pp.a_t : Vec3(pp.grad.col(mu - 1));
    const Vec3 dm = mu == 0 ? pm.a_t : Vec3(pm.grad.col(mu - 1));
    Blocks b;
    b.chi_plus = chi_from_potentials({0.0, dp}, Chirality::Plus);
    b.chi_minus = chi_from_potentials({0.0, dm}, Chirality::Minus);
    out[mu] = assemble(b);
  }
  return out;
}

LorentzTransformedField::LorentzTransformedField(FieldPtr base, LorentzElement L)
    : PhotonField(base->constants()), base_(std::move(base)), L_(L), inverse_(vector_action(L).inverse()) {}

Bispinor LorentzTransformedField::value(double t, const Vec3& s) const {
  FourVector x(t, s(0), s(1), s(2));
  FourVector y = inverse_ * x;
  return lorentz_act(L_, base_->value(y(0), y.tail<3>()));
}

PerturbedField::PerturbedField(FieldPtr base, VecPoly P, double eps)
    : PhotonField(base->constants()), base_(std::move(base)), P_(std::move(P)), eps_(eps), deg_(P_.degree()) {}

Bispinor PerturbedField::value(double t, const Vec3& s) const {
  Bispinor psi = base_->value(t, s);
  const Vec3 da = eps_ * P_(s) / std::pow(s.norm(), deg_ + 1);
  psi.block<2, 2>(2, 0) += chi_from_potentials({0.0, da}, Chirality::Plus);
  return psi;
}

std::shared_ptr<MultipoleField> paper_example_field(const PhysicalConstants& c, const Profile& f1, const Profile& f2) {
  MultipoleMode m1{1, example_P1(), VecPoly(), f1, Direction::Outgoing};
  MultipoleMode m2{2, example_P2(), VecPoly(), f2, Direction::Outgoing};
  if (f1.smoothness() < 3 || f2.smoothness() < 4)
    throw PreconditionError("example profiles must be C^3 (f1) and C^4 (f2)");
  return std::make_shared<MultipoleField>(std::vector{m1}, std::vector{m2}, c);
}

}  // namespace photon

namespace photon {

std::array<Bispinor, 4> fd_gradient(const PhotonField& field, double t, const Vec3& s, double h) {
  auto f = [&field](double tt, const Vec3& x) { return field.value(tt, x); };
  std::array<Bispinor, 4> out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = fd_derivative(f, t, s, mu, h);
  return out;
}

Bispinor equation_residual(const PhotonField& field, double t, const Vec3& s, double h) {
  const auto d = fd_gradient(field, t, s, h);
  Bispinor dslash = Bispinor::Zero();
  for (int mu = 0; mu < 4; ++mu) dslash += gamma(mu) * d[mu];
  const auto& c = field.constants();
  return -I * c.hbar * dslash + c.m_photon * block_projection(field.value(t, s));
}

RelativeResidual relative_equation_residual(const PhotonField& field, double t, const Vec3& s, double h) {
  return {equation_residual(field, t, s, h).norm(), field.value(t, s).norm()};
}

namespace {

struct FieldDerivs {
  Eigen::Matrix3d de, db;  // (i, mu): d_mu of component i, mu = 0..3 stored as columns 0..2 spatial
  Vec3 et, bt;
};

FieldDerivs field_derivatives(const FieldVectorsFn& fv, double t, const Vec3& s, double h) {
  auto e = [&](double tt, const Vec3& x) { return Vec3(fv(tt, x).e); };
  auto b = [&](double tt, const Vec3& x) { return Vec3(fv(tt, x).b); };
  FieldDerivs d;
  d.et = fd_derivative(e, t, s, 0, h);
  d.bt = fd_derivative(b, t, s, 0, h);
  for (int j = 0; j < 3; ++j) {
    d.de.col(j) = fd_derivative(e, t, s, j + 1, h);
    d.db.col(j) = fd_derivative(b, t, s, j + 1, h);
  }
  return d;
}

Vec3 curl_of(const Eigen::Matrix3d& g) { return {g(2, 1) - g(1, 2), g(0, 2) - g(2, 0), g(1, 0) - g(0, 1)}; }

}  // namespace

Eigen::Matrix<double, 8, 1> maxwell_residual(const FieldVectorsFn& fv, double t, const Vec3& s, double h) {
  const auto d = field_derivatives(fv, t, s, h);
  Eigen::Matrix<double, 8, 1> r;
  r.segment<3>(0) = d.et - curl_of(d.db);
  r(3) = d.de.trace();
  r.segment<3>(4) = d.bt + curl_of(d.de);
  r(7) = d.db.trace();
  return r;
}

double maxwell_scale(const FieldVectorsFn& fv, double t, const Vec3& s, double h) {
  const auto d = field_derivatives(fv, t, s, h);
  return d.et.cwiseAbs().sum() + d.bt.cwiseAbs().sum() + 2.0 * (d.de.cwiseAbs().sum() + d.db.cwiseAbs().sum());
}

Quaternion weyl_residual(const FieldVectorsFn& fv, Chirality c, double t, const Vec3& s, double h) {
  const double sign = c == Chirality::Plus ? 1.0 : -1.0;
  auto sv = [&](double tt, const Vec3& x) {
    const auto f = fv(tt, x);
    return Quaternion(pauli_dot(CVec3(f.e.cast<cplx>() + sign * I * f.b.cast<cplx>())));
  };
  Quaternion r = fd_derivative(sv, t, s, 0, h);
  for (int k = 1; k <= 3; ++k) r += sign * pauli(k) * fd_derivative(sv, t, s, k, h);
  return r;
}

std::array<Quaternion, 2> weyl_block_residual(const PhotonField& field, double t, const Vec3& s, double h) {
  auto phip = [&](double tt, const Vec3& x) { return Quaternion(field.value(tt, x).block<2, 2>(0, 0)); };
  auto phim = [&](double tt, const Vec3& x) { return Quaternion(field.value(tt, x).block<2, 2>(2, 2)); };
  Quaternion rp = fd_derivative(phip, t, s, 0, h), rm = fd_derivative(phim, t, s, 0, h);
  for (int k = 1; k <= 3; ++k) {
    rp += pauli(k) * fd_derivative(phip, t, s, k, h);
    rm -= pauli(k) * fd_derivative(phim, t, s, k, h);
  }
  return {rp, rm};
}

}  // namespace photon
