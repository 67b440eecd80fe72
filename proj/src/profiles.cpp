#include "photon/profiles.hpp"

#include <cmath>

#include "photon/errors.hpp"

namespace photon {

namespace {

// Beyond these margins the C-infinity step equals 0 or 1 to far below double precision.
constexpr double kFlatMargin = 1e-3;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Jet smooth_step(const Jet& y, int cutoff_order) {
  const int order = y.order();
  const double y0 = y.value();
  if (y0 <= 0.0) return Jet(order, 0.0);
  if (y0 >= 1.0) return Jet(order, 1.0);
  if (cutoff_order >= 0) {
    const int k = cutoff_order;
    Jet sum(order, 0.0);
    for (int j = 0; j <= k; ++j) sum += binomial(k + j, j) * binomial(2 * k + 1, k - j) * pow(-y, j);
    return pow(y, k + 1) * sum;
  }
  if (y0 < kFlatMargin) return Jet(order, 0.0);
  if (y0 > 1.0 - kFlatMargin) return Jet(order, 1.0);
  // S = 1 / (1 + exp(z)), z = 1/y - 1/(1-y); evaluated in the overflow-free branch.
  const Jet z = 1.0 / y - 1.0 / (1.0 - y);
  if (z.value() > 0.0) {
    const Jet e = exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + exp(z));
}

Profile Profile::polynomial(std::vector<double> c) {
  Profile p;
  p.kind = Kind::Polynomial;
  p.coefficients = std::move(c);
  return p;
}

Profile Profile::log_linear(double amplitude, double width) {
  Profile p;
  p.kind = Kind::LogLinear;
  p.amplitude = amplitude;
  p.width = width;
  return p;
}

Profile Profile::rational(int power, double amplitude, double width) {
  Profile p;
  p.kind = Kind::Rational;
  p.power = power;
  p.amplitude = amplitude;
  p.width = width;
  return p;
}

Profile Profile::step(double amplitude, double width) {
  Profile p;
  p.kind = Kind::Step;
  p.amplitude = amplitude;
  p.width = width;
  return p;
}

Profile Profile::bump(double center, double width, double amplitude) {
  Profile p;
  p.kind = Kind::Bump;
  p.center = center;
  p.width = width;
  p.amplitude = amplitude;
  return p;
}

Jet Profile::jet(double u, int order) const {
  switch (kind) {
    case Kind::Zero:
      return Jet(order, 0.0);
    case Kind::Polynomial: {
      const Jet x = Jet::variable(order, u);
      Jet r(order, 0.0);
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) r = r * x + *it;
      return amplitude * r;
    }
    case Kind::Bump: {
      const double x0 = (u - center) / width;
      if (cutoff_order >= 0) {
        // C^k polynomial bump (1 - x^2)^(k+1).
        if (std::abs(x0) >= 1.0) return Jet(order, 0.0);
        Jet x = Jet::variable(order, x0);
        x *= 1.0 / width;
        x[0] = x0;
        const Jet base = Jet(order, 1.0) - x * x;
        Jet out(order, amplitude);
        for (int k = 0; k <= cutoff_order; ++k) out = out * base;
        return out;
      }
      if (1.0 - x0 * x0 <= kFlatMargin) return Jet(order, 0.0);
      Jet x = Jet::variable(order, x0);
      x *= 1.0 / width;
      x[0] = x0;
      return amplitude * exp(1.0 - 1.0 / (1.0 - x * x));
    }
    case Kind::LogLinear:
    case Kind::Rational:
    case Kind::Step: {
      const double rho0 = center - u;
      if (rho0 <= 0.0) return Jet(order, 0.0);
      // jet in u of rho = center - u
      Jet rho = Jet::variable(order, rho0);
      if (order > 0) rho[1] = -1.0;
      Jet y = rho * (1.0 / width);
      Jet s = smooth_step(y, cutoff_order);
      Jet body(order, 1.0);
      if (kind == Kind::LogLinear) body = rho * log(1.0 + rho);
      if (kind == Kind::Rational) body = pow(rho, power) / (1.0 + rho);
      return amplitude * (body * s);
    }
  }
  return Jet(order, 0.0);
}

void Profile::derivatives(double u, int order, double* out) const {
  const Jet j = jet(u, order);
  for (int k = 0; k <= order; ++k) out[k] = j.derivative(k);
}

double Profile::operator()(double u) const { return jet(u, 0).value(); }

int Profile::smoothness() const {
  switch (kind) {
    case Kind::LogLinear:
    case Kind::Rational:
    case Kind::Step:
    case Kind::Bump:
      return cutoff_order < 0 ? kSmooth : cutoff_order;
    default:
      return kSmooth;
  }
}

std::string Profile::name() const {
  switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::Polynomial: return "polynomial";
    case Kind::LogLinear: return "log_linear";
    case Kind::Rational: return "rational";
    case Kind::Step: return "step";
    case Kind::Bump: return "bump";
  }
  return "unknown";
}

void Profile::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) throw PreconditionError("profile width must be positive");
  if (!std::isfinite(amplitude) || !std::isfinite(center)) throw PreconditionError("profile parameters must be finite");
  if (kind == Kind::Rational && power < 0) throw PreconditionError("rational profile power must be >= 0");
  if (cutoff_order > 7) throw PreconditionError("polynomial cutoff order must be <= 7");
}

}  // namespace photon
