#pragma once

#include <cstddef>
#include <vector>

#include "photon/clifford.hpp"

namespace photon {

struct QuadratureRule1D {
  std::vector<double> nodes, weights;
};

// Gauss-Legendre rule with n nodes on [a, b].
QuadratureRule1D gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Composite Gauss-Legendre over consecutive panels [breaks[i], breaks[i+1]].
QuadratureRule1D composite_gauss(const std::vector<double>& breaks, int nodes_per_panel);

// Pairwise (cascade) summation: deterministic and accurate.
template <class T>
T pairwise_sum(const T* x, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s = x[0];
    for (std::size_t i = 1; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

template <class T>
T pairwise_sum(const std::vector<T>& x) {
  return pairwise_sum(x.data(), x.size());
}

// Product Gauss-Legendre(cos theta) x uniform(phi) rule on the unit sphere; weights sum to 4 pi.
struct SphereRule {
  int n_theta = 32, n_phi = 64;
  std::vector<Vec3> nodes;
  std::vector<double> weights;

  SphereRule() = default;
  SphereRule(int n_theta, int n_phi);
};

// Ball (or shell) rule: composite radial Gauss-Legendre x sphere rule.
struct BallRule {
  std::vector<Vec3> nodes;
  std::vector<double> weights;

  BallRule(const QuadratureRule1D& radial, const SphereRule& sphere);
};

// Radial breakpoints for a ball of radius R around a wave front at |s| = front of width w:
// [0, front], [front, front + w] split into `shell_panels`, then doubling panels up to R.
std::vector<double> front_adapted_breaks(double R, double front, double width, int shell_panels = 4);

// Evaluate f at every node (in parallel when requested) and return the weighted pairwise sum.
// The result is independent of the number of threads.
template <class T, class F>
T integrate_nodes(const std::vector<Vec3>& nodes, const std::vector<double>& weights, const F& f, bool parallel) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nodes.size());
  std::vector<T> vals(n);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) vals[i] = weights[i] * f(nodes[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) vals[i] = weights[i] * f(nodes[i]);
  }
  return pairwise_sum(vals);
}

}  // namespace photon
