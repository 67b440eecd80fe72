#include "photon/kernels.hpp"

namespace photon::kernels {

namespace {

inline void leapfrog_node(const cplx* cur, cplx* old, int n, int i, int j, int k, double lambda2) {
  const std::size_t s = static_cast<std::size_t>(n) * n * kComponents;
  const std::size_t row = static_cast<std::size_t>(n) * kComponents;
  const std::size_t c = node_index(n, i, j, k) * kComponents;
  const cplx* u = cur + c;
  cplx* w = old + c;
  for (int q = 0; q < kComponents; ++q) {
    const cplx nb = u[q - s] + u[q + s] + u[q - row] + u[q + row] + u[q - kComponents] + u[q + kComponents];
    w[q] = 2.0 * u[q] - w[q] + lambda2 * (nb - 6.0 * u[q]);
  }
}

inline void laplacian_node(const cplx* cur, cplx* out, int n, int i, int j, int k, double scale) {
  const std::size_t s = static_cast<std::size_t>(n) * n * kComponents;
  const std::size_t row = static_cast<std::size_t>(n) * kComponents;
  const std::size_t c = node_index(n, i, j, k) * kComponents;
  const cplx* u = cur + c;
  cplx* w = out + c;
  for (int q = 0; q < kComponents; ++q) {
    const cplx nb = u[q - s] + u[q + s] + u[q - row] + u[q + row] + u[q - kComponents] + u[q + kComponents];
    w[q] = (nb - 6.0 * u[q]) * scale;
  }
}

}  // namespace

void leapfrog_update_serial(const cplx* cur, cplx* old, int n, double lambda2) {
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k < n - 1; ++k) leapfrog_node(cur, old, n, i, j, k, lambda2);
}

void leapfrog_update_omp(const cplx* cur, cplx* old, int n, double lambda2) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k < n - 1; ++k) leapfrog_node(cur, old, n, i, j, k, lambda2);
}

void laplacian_serial(const cplx* u, cplx* out, int n, double scale) {
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k < n - 1; ++k) laplacian_node(u, out, n, i, j, k, scale);
}

void laplacian_omp(const cplx* u, cplx* out, int n, double scale) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k < n - 1; ++k) laplacian_node(u, out, n, i, j, k, scale);
}

}  // namespace photon::kernels
