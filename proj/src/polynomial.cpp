#include "photon/polynomial.hpp"

#include <cmath>

#include "photon/errors.hpp"

namespace photon {

namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

double monomial(const Exponents& e, const Vec3& s) { return ipow(s(0), e[0]) * ipow(s(1), e[1]) * ipow(s(2), e[2]); }

}  // namespace

VecPoly& VecPoly::add_term(const Exponents& e, const Vec3& c) {
  for (int x : e)
    if (x < 0) throw PreconditionError("monomial exponents must be non-negative");
  terms_.try_emplace(e, Vec3::Zero()).first->second += c;
  return *this;
}

bool VecPoly::is_zero(double tol) const {
  for (const auto& [e, c] : terms_)
    if (c.cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

int VecPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    if (!c.isZero(0)) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool VecPoly::is_homogeneous(int deg) const {
  for (const auto& [e, c] : terms_)
    if (!c.isZero(0) && e[0] + e[1] + e[2] != deg) return false;
  return true;
}

Vec3 VecPoly::operator()(const Vec3& s) const {
  Vec3 v = Vec3::Zero();
  for (const auto& [e, c] : terms_) v += monomial(e, s) * c;
  return v;
}

Eigen::Matrix3d VecPoly::jacobian(const Vec3& s) const {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  for (const auto& [e, c] : terms_)
    for (int j = 0; j < 3; ++j) {
      if (e[j] == 0) continue;
      Exponents d = e;
      d[j] -= 1;
      m.col(j) += (e[j] * monomial(d, s)) * c;
    }
  return m;
}

VecPoly VecPoly::derivative(int j) const {
  VecPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponents d = e;
    d[j] -= 1;
    out.add_term(d, double(e[j]) * c);
  }
  return out;
}

VecPoly VecPoly::laplacian() const {
  VecPoly out;
  for (int j = 0; j < 3; ++j) out = out + derivative(j).derivative(j);
  return out;
}

VecPoly VecPoly::times_r2() const {
  VecPoly out;
  for (const auto& [e, c] : terms_)
    for (int j = 0; j < 3; ++j) {
      Exponents d = e;
      d[j] += 2;
      out.add_term(d, c);
    }
  return out;
}

ScalarPoly VecPoly::dot_s() const {
  ScalarPoly out;
  for (const auto& [e, c] : terms_)
    for (int j = 0; j < 3; ++j) {
      Exponents d = e;
      d[j] += 1;
      out[d] += c(j);
    }
  return out;
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
  VecPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

double VecPoly::max_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, c.cwiseAbs().maxCoeff());
  return m;
}

bool is_zero(const ScalarPoly& p, double tol) {
  for (const auto& [e, c] : p)
    if (std::abs(c) > tol) return false;
  return true;
}

}  // namespace photon
