#include <doctest.h>

#include <random>

#include "photon/conservation.hpp"
#include "photon/errors.hpp"
#include "photon/grid.hpp"
#include "photon/kernels.hpp"
#include "test_util.hpp"

using namespace photon;

namespace {

std::vector<cplx> random_grid(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<cplx> v(static_cast<std::size_t>(n) * n * n * kernels::kComponents);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

// Example field with a wide cutoff so that the front is resolved on coarse grids.
std::shared_ptr<MultipoleField> wide_example() {
  return paper_example_field({}, Profile::log_linear(1.0, 4.0), Profile::rational(3, 1.0, 4.0));
}

// Incoming shells of both chiralities: compact support away from the origin for t in [0, 0.5].
std::shared_ptr<MultipoleField> incoming_shells() {
  Profile b = Profile::bump(3.0, 2.0);
  b.cutoff_order = 7;
  Profile b2 = b;
  b2.amplitude = 0.7;
  b2.center = 3.4;
  MultipoleMode p{1, example_P1(), VecPoly(), b, Direction::Incoming};
  MultipoleMode m{1, example_P1(), VecPoly(), b2, Direction::Incoming};
  return std::make_shared<MultipoleField>(std::vector{p}, std::vector{m});
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree bitwise") {
  std::mt19937_64 rng(11);
  const int n = 13;
  const auto cur = random_grid(n, rng);
  auto old_a = random_grid(n, rng);
  auto old_b = old_a;
  kernels::leapfrog_update_serial(cur.data(), old_a.data(), n, 0.23);
  kernels::leapfrog_update_omp(cur.data(), old_b.data(), n, 0.23);
  CHECK(old_a == old_b);
  std::vector<cplx> la(cur.size()), lb(cur.size());
  kernels::laplacian_serial(cur.data(), la.data(), n, 1.7);
  kernels::laplacian_omp(cur.data(), lb.data(), n, 1.7);
  CHECK(la == lb);
  // Boundary layer untouched.
  CHECK(la[0] == cplx(0.0));
}

TEST_CASE("laplacian stencil on a quadratic") {
  const int n = 6;
  std::vector<cplx> u(static_cast<std::size_t>(n) * n * n * kernels::kComponents), out(u.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        u[kernels::node_index(n, i, j, k) * kernels::kComponents] = double(i * i + 2 * j * j - k * k);
  kernels::laplacian_serial(u.data(), out.data(), n, 1.0);
  CHECK(out[kernels::node_index(n, 2, 3, 1) * kernels::kComponents] == cplx(2.0 + 4.0 - 2.0));
}

TEST_CASE("grid geometry and node lookup") {
  const GridSpec g{8, 2.0};
  CHECK(g.spacing() == 0.5);
  CHECK(g.coordinate(0) == -1.75);
  CHECK(g.coordinate(7) == 1.75);
  CHECK_THROWS_AS(GridSpec({2, 1.0}).validate(), PreconditionError);
  CHECK_THROWS_AS(GridSpec({8, -1.0}).validate(), PreconditionError);
  const auto f = wide_example();
  const GridField gf = sample_grid_field(*f, g, 1.0);
  CHECK(testutil::max_abs(gf.value(1.0, g.node(3, 4, 5)) - f->value(1.0, g.node(3, 4, 5))) == 0.0);
  CHECK_THROWS_AS(gf.value(1.5, g.node(3, 4, 5)), DomainError);
  CHECK_THROWS_AS(gf.value(1.0, Vec3(0.1, 0.2, 0.3)), DomainError);
  CHECK_THROWS_AS(gf.node_gradient(0, 3, 3), DomainError);
}

TEST_CASE("serial and parallel evolution agree bitwise") {
  const auto f = wide_example();
  const GridSpec g{16, 3.0};
  CauchyOptions o;
  o.compat_tol = 1.0;
  o.boundary = [&](double t, const Vec3& s) { return f->value(t, s); };
  o.parallel = false;
  const GridField a = cauchy_evolve(sample_slab(*f, g, 1.0, false), 1.0, 0.3, f->constants(), o);
  o.parallel = true;
  const GridField b = cauchy_evolve(sample_slab(*f, g, 1.0, true), 1.0, 0.3, f->constants(), o);
  const std::size_t total = g.size() * kernels::kComponents;
  CHECK(std::equal(a.slab().data(), a.slab().data() + total, b.slab().data()));
  CHECK(grid_error(a, *f, false).error_l2 == grid_error(b, *f, true).error_l2);
}

TEST_CASE("incompatible data and bad options are rejected") {
  const auto f = wide_example();
  const GridSpec g{16, 3.0};
  GridSlab bad = sample_slab(*f, g, 1.0);
  bad.at(5, 5, 5).block<2, 2>(0, 0) += Quaternion::Identity();  // trace of phi+ no longer zero
  const auto rep = check_compatibility(bad);
  CHECK(rep.trace_defect > 0.1);
  CHECK_THROWS_AS(cauchy_evolve(bad, 1.0, 0.5, f->constants()), PreconditionError);
  CauchyOptions o;
  o.cfl = 0.8;
  CHECK_THROWS_AS(cauchy_evolve(sample_slab(*f, g, 1.0), 1.0, 0.5, f->constants(), o), PreconditionError);
  CHECK_THROWS_AS(cauchy_evolve(sample_slab(*f, g, 1.0), 1.0, 0.0, f->constants()), PreconditionError);
}

TEST_CASE("second-order convergence with analytic boundary values") {
  const auto f = wide_example();
  CauchyOptions o;
  o.boundary = [&](double t, const Vec3& s) { return f->value(t, s); };
  double err[2];
  int i = 0;
  for (int n : {32, 64}) {
    const GridSpec g{n, 3.0};
    const GridField gf = cauchy_evolve(sample_slab(*f, g, 1.0), 1.0, 1.0, f->constants(), o);
    CHECK(gf.time() == doctest::Approx(2.0));
    err[i++] = grid_error(gf, *f).error_l2;
    // The evolved grid satisfies the first-order system to discretization accuracy.
    const int c = n / 2 + n / 8;
    const Bispinor res = gf.node_residual(c, n / 2, n / 3);
    CHECK(res.norm() < 0.1 * (1.0 + gf.node_value(c, n / 2, n / 3).norm()));
  }
  const double ratio = err[0] / err[1];
  INFO("ratio ", ratio);
  CHECK(ratio > 3.2);
  CHECK(ratio < 4.8);
}

TEST_CASE("grid charges of compact data are conserved within the discretization bound") {
  const auto f = incoming_shells();
  const GridSpec g{64, 5.5};
  const double t0 = 0.0, T = 0.5;
  const GridField start = sample_grid_field(*f, g, t0);
  const GridField end = cauchy_evolve(sample_slab(*f, g, t0), t0, T, f->constants());
  const GridCharges q0 = charges_on_grid(start);
  const GridCharges q1 = charges_on_grid(end);
  const double delta = grid_error(end, *f).error_l2;
  CHECK(delta > 0.0);
  const int noether[8] = {0, 1, 4, 5, 6, 7, 8, 9};
  for (int k : noether) {
    const double bound = sesquilinear_bound(Generator::basis(k), q1.psi_l2, delta);
    INFO(charge_names()[k], " q0=", q0.q(k), " q1=", q1.q(k), " bound=", bound);
    CHECK(std::abs(q1.q(k) - q0.q(k)) <= bound);
  }
  // Not trivially zero: Re z and Im z carry a sizeable fraction of their L1 scale.
  CHECK(std::abs(q0.q(0)) + std::abs(q0.q(1)) > 0.1 * (q0.l1(0) + q0.l1(1)));
}
