#pragma once

#include <cstddef>

#include "photon/clifford.hpp"

// Stencil kernels on a cubic grid of n^3 nodes, 16 complex components per node
// (a column-major bispinor), node index ((i n + j) n + k). Only interior nodes are written.
// Each kernel has a serial reference and an OpenMP version with identical per-node arithmetic,
// so both produce bit-identical results.
namespace photon::kernels {

inline constexpr int kComponents = 16;

inline std::size_t node_index(int n, int i, int j, int k) {
  return (static_cast<std::size_t>(i) * n + j) * n + k;
}

// old <- 2 cur - old + lambda2 * (sum of 6 neighbours - 6 cur)
void leapfrog_update_serial(const cplx* cur, cplx* old, int n, double lambda2);
void leapfrog_update_omp(const cplx* cur, cplx* old, int n, double lambda2);

// out <- (sum of 6 neighbours - 6 u) * scale
void laplacian_serial(const cplx* u, cplx* out, int n, double scale);
void laplacian_omp(const cplx* u, cplx* out, int n, double scale);

}  // namespace photon::kernels
