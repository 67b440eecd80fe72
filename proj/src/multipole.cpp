#include "photon/multipole.hpp"

#include <cmath>

#include "photon/errors.hpp"

namespace photon {

std::vector<double> marchal_coefficients(int n, Direction d) {
  const double eps = d == Direction::Outgoing ? -1.0 : 1.0;  // d/dr f(t -+ r) = eps f'
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  for (int m = 0; m < n; ++m) {
    std::vector<double> next(n + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
      // d/dr [f^(k) r^-(2m+1-k)] / r
      next[k + 1] += eps * c[k];
      next[k] += -(2 * m + 1 - k) * c[k];
    }
    c = next;
  }
  return c;
}

RadialValues marchal_radial(int n, const Profile& f, Direction d, double t, double r, int shift) {
  if (!(r > 0.0)) throw DomainError("multipole modes are singular at s = 0");
  static thread_local std::vector<double> cache[2][16];
  auto& c = cache[d == Direction::Outgoing ? 0 : 1][n];
  if (c.empty()) c = marchal_coefficients(n, d);

  const double eps = d == Direction::Outgoing ? -1.0 : 1.0;
  const double u = t + eps * r;
  const int order = n + shift + 1;
  double fd[Jet::kMaxOrder + 1];
  f.derivatives(u, order, fd);

  const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-r)^n r^-(2n+1-k) = (-1)^n r^(k-n-1)
  RadialValues out;
  for (int k = 0; k <= n; ++k) {
    const double p = std::pow(r, k - n - 1);
    const double f0 = fd[k + shift], f1 = fd[k + shift + 1];
    out.g += c[k] * f0 * p;
    out.g_t += c[k] * f1 * p;
    out.g_r += c[k] * (eps * f1 * p + (k - n - 1) * f0 * p / r);
  }
  out.g *= sign;
  out.g_t *= sign;
  out.g_r *= sign;
  return out;
}

void MultipoleMode::validate() const {
  if (n < 1 || n > 12) throw PreconditionError("multipole order must be in 1..12");
  if (!P.is_homogeneous(n)) throw PreconditionError("P_n must be homogeneous of degree n");
  if (n < 3 && !Pm2.is_zero()) throw PreconditionError("P_{n-2} must vanish for n < 3");
  if (n >= 3 && !Pm2.is_homogeneous(n - 2)) throw PreconditionError("P_{n-2} must be homogeneous of degree n-2");
  const double scale = std::max(1.0, std::max(P.max_coefficient(), Pm2.max_coefficient()));
  const double tol = 1e-12 * scale;
  if (!P.laplacian().is_zero(tol) || !Pm2.laplacian().is_zero(tol))
    throw PreconditionError("multipole polynomials must be harmonic");
  ScalarPoly trans = P.dot_s();
  for (const auto& [e, c] : Pm2.times_r2().dot_s()) trans[e] += c;
  if (!is_zero(trans, tol)) throw PreconditionError("transversality s.(P_n + |s|^2 P_{n-2}) = 0 violated");
  f.validate();
  if (f.smoothness() < n + 2) throw PreconditionError("profile needs at least n+2 continuous derivatives");
}

MultipoleMode::Sample MultipoleMode::sample(double t, const Vec3& s) const {
  const double r = s.norm();
  if (!(r > 0.0)) throw DomainError("multipole modes are singular at s = 0");
  Sample out;
  const Vec3 nhat = s / r;
  // The P_{n-2} term carries (-r)^(n-2) (1/r d/dr)^(n-2) f''/r: only this order solves the wave equation.
  auto add = [&](const VecPoly& poly, int deg, int shift) {
    if (poly.is_zero()) return;
    const RadialValues g = marchal_radial(deg, f, direction, t, r, shift);
    const double rm = std::pow(r, -deg);
    const Vec3 A = poly(s) * rm;
    const Eigen::Matrix3d dA = poly.jacobian(s) * rm - double(deg) / r * A * nhat.transpose();
    out.a += A * g.g;
    out.a_t += A * g.g_t;
    out.grad += dA * g.g + g.g_r * A * nhat.transpose();
  };
  add(P, n, 0);
  add(Pm2, n - 2, 2);
  return out;
}

Vec3 marchal_mode_eval(const MultipoleMode& mode, double t, const Vec3& s) { return mode.sample(t, s).a; }

VecPoly example_P1() {
  VecPoly p;
  p.add_term({0, 0, 1}, Vec3(0, -1, 0));
  p.add_term({0, 1, 0}, Vec3(0, 0, 1));
  return p;
}

VecPoly example_P2() {
  VecPoly p;
  p.add_term({0, 1, 1}, Vec3(-1, 0, 0));
  p.add_term({1, 0, 1}, Vec3(0, 1, 0));
  return p;
}

}  // namespace photon
