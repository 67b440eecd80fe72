#pragma once

#include <functional>

#include "photon/field.hpp"

namespace photon {

// Fourth-order central first and second differences along coordinate mu (0 = t, 1..3 = s).
template <class F>
auto fd_derivative(const F& f, double t, const Vec3& s, int mu, double h) {
  auto at = [&](double d) {
    if (mu == 0) return f(t + d, s);
    Vec3 x = s;
    x(mu - 1) += d;
    return f(t, x);
  };
  using T = decltype(at(0.0));
  const T r = at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h);
  return T(r / (12.0 * h));
}

template <class F>
auto fd_second(const F& f, double t, const Vec3& s, int mu, double h) {
  auto at = [&](double d) {
    if (mu == 0) return f(t + d, s);
    Vec3 x = s;
    x(mu - 1) += d;
    return f(t, x);
  };
  using T = decltype(at(0.0));
  const T r = -at(-2 * h) + 16.0 * at(-h) - 30.0 * at(0.0) + 16.0 * at(h) - at(2 * h);
  return T(r / (12.0 * h * h));
}

std::array<Bispinor, 4> fd_gradient(const PhotonField& field, double t, const Vec3& s, double h);

// -i hbar Dslash psi + m Pi psi by fourth-order finite differences.
Bispinor equation_residual(const PhotonField& field, double t, const Vec3& s, double h = 1e-2);

// Residual of the component system in the same units; also returns the local norm of psi.
struct RelativeResidual {
  double residual = 0.0;
  double scale = 0.0;
  double relative() const { return scale > 0.0 ? residual / scale : residual; }
};
RelativeResidual relative_equation_residual(const PhotonField& field, double t, const Vec3& s, double h = 1e-2);

using FieldVectorsFn = std::function<FieldVectors(double, const Vec3&)>;

// (d_t e - curl b, div e, d_t b + curl e, div b) by fourth-order differences.
Eigen::Matrix<double, 8, 1> maxwell_residual(const FieldVectorsFn& fv, double t, const Vec3& s, double h = 1e-2);
// Sum of absolute values of the terms entering maxwell_residual (scale for relative residuals).
double maxwell_scale(const FieldVectorsFn& fv, double t, const Vec3& s, double h = 1e-2);

// (d_t + c sigma.grad)(sigma.V) for V = e + i b (c = +1) or e - i b (c = -1).
Quaternion weyl_residual(const FieldVectorsFn& fv, Chirality c, double t, const Vec3& s, double h = 1e-2);

// Weyl residuals D_+ phi_+ and D_- phi_- taken directly on the diagonal blocks of a field.
std::array<Quaternion, 2> weyl_block_residual(const PhotonField& field, double t, const Vec3& s, double h = 1e-2);

}  // namespace photon
