#include "photon/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "photon/errors.hpp"

namespace photon {

namespace {

QuadratureRule1D legendre_nodes(int n) {
  // Newton iteration on P_n from the Chebyshev-like initial guesses.
  QuadratureRule1D q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    q.weights[i] = w;
    q.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) q.nodes[n / 2] = 0.0;
  return q;
}

const QuadratureRule1D& cached_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule1D> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, legendre_nodes(n)).first;
  return it->second;
}

}  // namespace

QuadratureRule1D gauss_legendre(int n, double a, double b) {
  if (n < 1) throw PreconditionError("Gauss-Legendre order must be >= 1");
  if (n == 1) return {{0.5 * (a + b)}, {b - a}};
  const auto& ref = cached_legendre(n);
  QuadratureRule1D q;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.nodes.push_back(c + h * ref.nodes[i]);
    q.weights.push_back(h * ref.weights[i]);
  }
  return q;
}

QuadratureRule1D composite_gauss(const std::vector<double>& breaks, int nodes_per_panel) {
  QuadratureRule1D q;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    auto p = gauss_legendre(nodes_per_panel, breaks[i], breaks[i + 1]);
    q.nodes.insert(q.nodes.end(), p.nodes.begin(), p.nodes.end());
    q.weights.insert(q.weights.end(), p.weights.begin(), p.weights.end());
  }
  return q;
}

SphereRule::SphereRule(int nt, int np) : n_theta(nt), n_phi(np) {
  if (nt < 1 || np < 1) throw PreconditionError("sphere rule orders must be positive");
  const auto ct = gauss_legendre(nt);
  for (int i = 0; i < nt; ++i) {
    const double z = ct.nodes[i], rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < np; ++j) {
      const double phi = 2.0 * M_PI * (j + 0.5) / np;
      nodes.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
      weights.push_back(ct.weights[i] * 2.0 * M_PI / np);
    }
  }
}

BallRule::BallRule(const QuadratureRule1D& radial, const SphereRule& sphere) {
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = radial.nodes[i];
    for (std::size_t j = 0; j < sphere.nodes.size(); ++j) {
      nodes.push_back(r * sphere.nodes[j]);
      weights.push_back(radial.weights[i] * r * r * sphere.weights[j]);
    }
  }
}

std::vector<double> front_adapted_breaks(double R, double front, double width, int shell_panels) {
  std::vector<double> b{0.0};
  auto push = [&](double x) {
    x = std::min(x, R);
    if (x > b.back() + 1e-14) b.push_back(x);
  };
  push(front);
  for (int k = 1; k <= shell_panels; ++k) push(front + width * k / shell_panels);
  double x = std::max(front + width, b.back());
  double step = std::max(width, 1.0);
  while (x < R) {
    x += step;
    push(x);
    step *= 2.0;
  }
  push(R);
  return b;
}

}  // namespace photon
