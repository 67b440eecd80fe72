#pragma once

#include <string>
#include <vector>

#include "photon/jet.hpp"

namespace photon {

// Scalar radial profile f(u) of a spherical wave f(t -+ r).
//
// The growing profiles are written in rho = center - u (rho = r - t for outgoing waves) and are
// switched on by a cutoff S(rho / width): S = 0 for rho <= 0 and S = 1 for rho >= width. With the
// C-infinity cutoff the origin source is off for t >= 0 and the resulting modes are smooth everywhere.
struct Profile {
  enum class Kind { Zero, Polynomial, LogLinear, Rational, Step, Bump };
  static constexpr int kSmooth = 1 << 20;

  Kind kind = Kind::Zero;
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
  int power = 3;                     // Rational: rho^power / (1 + rho)
  int cutoff_order = -1;             // -1: C-infinity step/bump; k >= 0: C^k smoothstep, bump (1 - x^2)^(k+1)
  std::vector<double> coefficients;  // Polynomial: sum c_k u^k

  static Profile zero() { return {}; }
  static Profile polynomial(std::vector<double> c);
  static Profile log_linear(double amplitude = 1.0, double width = 1.0);
  static Profile rational(int power, double amplitude = 1.0, double width = 1.0);
  static Profile step(double amplitude = 1.0, double width = 1.0);
  static Profile bump(double center, double width, double amplitude = 1.0);

  // Taylor jet of f at u.
  Jet jet(double u, int order) const;
  // out[k] = f^(k)(u), k = 0..order.
  void derivatives(double u, int order, double* out) const;
  double operator()(double u) const;

  // Number of continuous derivatives (kSmooth for C-infinity).
  int smoothness() const;
  std::string name() const;
  void validate() const;
};

// The cutoff S(y) and its jet in y.
Jet smooth_step(const Jet& y, int cutoff_order = -1);

}  // namespace photon
