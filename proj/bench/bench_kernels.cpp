#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "photon/field.hpp"
#include "photon/kernels.hpp"
#include "photon/quadrature.hpp"

namespace {

using namespace photon;

std::vector<cplx> random_slab(int n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<cplx> u(static_cast<std::size_t>(n) * n * n * kernels::kComponents);
  for (auto& x : u) x = {g(rng), g(rng)};
  return u;
}

template <void (*Kernel)(const cplx*, cplx*, int, double)>
void BM_leapfrog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cur = random_slab(n);
  auto old = random_slab(n);
  for (auto _ : state) {
    Kernel(cur.data(), old.data(), n, 0.25);
    benchmark::DoNotOptimize(old.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n) * n * n);
}

void BM_sphere_quadrature(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const auto field = paper_example_field({}, Profile::log_linear(), Profile::rational(3));
  const SphereRule sphere(32, 64);
  std::vector<Vec3> nodes(sphere.nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = 100.0 * sphere.nodes[i];
  for (auto _ : state) {
    const double v = integrate_nodes<double>(
        nodes, sphere.weights, [&](const Vec3& s) { return field->value(0.0, s).squaredNorm(); }, parallel);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_leapfrog<kernels::leapfrog_update_serial>)->Name("leapfrog/serial")->Arg(32)->Arg(64);
BENCHMARK(BM_leapfrog<kernels::leapfrog_update_omp>)->Name("leapfrog/omp")->Arg(32)->Arg(64);
BENCHMARK(BM_sphere_quadrature)->Name("sphere_quadrature/serial")->Arg(0);
BENCHMARK(BM_sphere_quadrature)->Name("sphere_quadrature/omp")->Arg(1);

BENCHMARK_MAIN();
