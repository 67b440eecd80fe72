#include <doctest.h>

#include <random>

#include "photon/errors.hpp"
#include "photon/fd.hpp"
#include "photon/multipole.hpp"
#include "test_util.hpp"

using namespace photon;

namespace {

// P_{n-2} = grad(s1 s2) and P_3 = (2/3)(r^2 grad(s1 s2) - 5 s s1 s2): harmonic, s.(P3 + r^2 P1) = 0.
VecPoly grad_s1s2() {
  VecPoly p;
  p.add_term({0, 1, 0}, Vec3(1, 0, 0));
  p.add_term({1, 0, 0}, Vec3(0, 1, 0));
  return p;
}

VecPoly cubic_partner() {
  const double c = 2.0 / 3.0;
  VecPoly p;
  p.add_term({2, 1, 0}, c * Vec3(-4, 0, 0));
  p.add_term({0, 3, 0}, c * Vec3(1, 0, 0));
  p.add_term({0, 1, 2}, c * Vec3(1, 0, 0));
  p.add_term({3, 0, 0}, c * Vec3(0, 1, 0));
  p.add_term({1, 2, 0}, c * Vec3(0, -4, 0));
  p.add_term({1, 0, 2}, c * Vec3(0, 1, 0));
  p.add_term({1, 1, 1}, c * Vec3(0, 0, -5));
  return p;
}

std::vector<MultipoleMode> test_modes() {
  return {
      {1, example_P1(), VecPoly(), Profile::log_linear(), Direction::Outgoing},
      {2, example_P2(), VecPoly(), Profile::rational(3), Direction::Outgoing},
      {3, cubic_partner(), grad_s1s2(), Profile::rational(4), Direction::Outgoing},
      {1, example_P1(), VecPoly(), Profile::bump(5.0, 4.0), Direction::Incoming},
  };
}

Vec3 random_point(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> u(rmin, rmax);
  Vec3 n = testutil::random_vec(rng);
  return u(rng) * n.normalized();
}

}  // namespace

TEST_CASE("polynomial bookkeeping") {
  const VecPoly p = cubic_partner();
  CHECK(p.degree() == 3);
  CHECK(p.is_homogeneous(3));
  CHECK(p.laplacian().is_zero(1e-14));
  CHECK(is_zero((p + grad_s1s2().times_r2()).dot_s(), 1e-14));
  const Vec3 s(0.3, -1.2, 0.7);
  const Eigen::Matrix3d J = p.jacobian(s);
  for (int j = 0; j < 3; ++j) {
    const Vec3 d = p.derivative(j)(s);
    CHECK((J.col(j) - d).norm() < 1e-14);
  }
  CHECK(example_P1().laplacian().is_zero());
  CHECK(is_zero(example_P2().dot_s()));
}

TEST_CASE("mode validation") {
  for (const auto& m : test_modes()) CHECK_NOTHROW(m.validate());
  MultipoleMode bad{1, example_P2(), VecPoly(), Profile::log_linear(), Direction::Outgoing};
  CHECK_THROWS_AS(bad.validate(), PreconditionError);  // wrong degree
  VecPoly radial;
  radial.add_term({1, 0, 0}, Vec3(1, 0, 0));
  MultipoleMode longitudinal{1, radial, VecPoly(), Profile::log_linear(), Direction::Outgoing};
  CHECK_THROWS_AS(longitudinal.validate(), PreconditionError);  // s.P != 0
  MultipoleMode rough{2, example_P2(), VecPoly(), Profile::rational(3), Direction::Outgoing};
  rough.f.cutoff_order = 2;
  CHECK_THROWS_AS(rough.validate(), PreconditionError);  // profile not C^{n+2}
}

TEST_CASE("modes solve the Coulomb-gauge wave equations") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  for (const auto& m : test_modes()) {
    INFO("mode n=", m.n, " profile=", m.f.name());
    auto a = [&](double t, const Vec3& s) { return marchal_mode_eval(m, t, s); };
    for (int i = 0; i < 40; ++i) {
      const double t = ut(rng);
      const Vec3 s = random_point(rng, 2.2, 6.0);
      Vec3 box = fd_second(a, t, s, 0, 1e-2);
      double scale = box.cwiseAbs().sum();
      double div = 0.0, dscale = 0.0;
      for (int j = 1; j <= 3; ++j) {
        const Vec3 d2 = fd_second(a, t, s, j, 1e-2);
        box -= d2;
        scale += d2.cwiseAbs().sum();
        const double dj = fd_derivative(a, t, s, j, 1e-2)(j - 1);
        div += dj;
        dscale += std::abs(dj);
      }
      CHECK(box.norm() < 1e-6 * scale);
      CHECK(std::abs(div) < 1e-6 * dscale + 1e-14);
    }
  }
}

TEST_CASE("analytic derivatives agree with finite differences") {
  std::mt19937_64 rng(12);
  for (const auto& m : test_modes()) {
    INFO("mode n=", m.n, " profile=", m.f.name());
    auto a = [&](double t, const Vec3& s) { return marchal_mode_eval(m, t, s); };
    for (int i = 0; i < 20; ++i) {
      const double t = 0.4;
      const Vec3 s = random_point(rng, 0.3, 5.0);
      const auto smp = m.sample(t, s);
      CHECK((smp.a - a(t, s)).norm() < 1e-14 * (1.0 + smp.a.norm()));
      const double sc = 1.0 + smp.grad.norm() + smp.a_t.norm();
      CHECK((smp.a_t - fd_derivative(a, t, s, 0, 1e-3)).norm() < 1e-7 * sc);
      for (int j = 0; j < 3; ++j) CHECK((smp.grad.col(j) - fd_derivative(a, t, s, j + 1, 1e-3)).norm() < 1e-7 * sc);
    }
  }
}

TEST_CASE("example modes are tangent to spheres") {
  std::mt19937_64 rng(13);
  for (const auto& m : test_modes()) {
    if (m.n == 3) continue;
    for (int i = 0; i < 200; ++i) {
      const Vec3 s = random_point(rng, 0.1, 50.0);
      const Vec3 a = marchal_mode_eval(m, 0.3, s);
      CHECK(std::abs(a.dot(s)) <= 1e-14 * a.norm() * s.norm() + 1e-300);
    }
  }
}

TEST_CASE("outgoing modes vanish inside the light cone of the switched-off source") {
  const MultipoleMode m{2, example_P2(), VecPoly(), Profile::rational(3), Direction::Outgoing};
  CHECK(marchal_mode_eval(m, 0.5, Vec3(0.1, 0.2, 0.3)).norm() == 0.0);
  CHECK(marchal_mode_eval(m, 0.5, Vec3(2.0, 1.0, 0.3)).norm() > 0.0);
}
