#include <doctest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "photon/errors.hpp"
#include "photon/multipole.hpp"

using namespace photon;

namespace {

void check_samples(const auto& samples, int n, const Profile& f, int shift, double tol) {
  for (const auto& s : samples) {
    const RadialValues v = marchal_radial(n, f, Direction::Outgoing, s.t, s.r, shift);
    CHECK(v.g == doctest::Approx(s.g).epsilon(tol));
    CHECK(v.g_t == doctest::Approx(s.g_t).epsilon(tol));
    CHECK(v.g_r == doctest::Approx(s.g_r).epsilon(tol));
  }
}

}  // namespace

TEST_CASE("jet arithmetic reproduces known Taylor coefficients") {
  const Jet x = Jet::variable(6, 0.3);
  const Jet e = exp(x);
  for (int k = 0; k <= 6; ++k) CHECK(e.derivative(k) == doctest::Approx(std::exp(0.3)).epsilon(1e-14));
  const Jet l = log(1.0 + x);
  CHECK(l.derivative(1) == doctest::Approx(1.0 / 1.3).epsilon(1e-14));
  CHECK(l.derivative(3) == doctest::Approx(2.0 / std::pow(1.3, 3)).epsilon(1e-14));
  const Jet q = x * x / (1.0 + x);
  CHECK(q.derivative(2) == doctest::Approx(2.0 / std::pow(1.3, 3)).epsilon(1e-13));
  CHECK(pow(x, 3).derivative(3) == doctest::Approx(6.0));
}

TEST_CASE("smooth step is flat outside (0, 1) and monotone inside") {
  for (int order : {-1, 3, 5}) {
    CHECK(smooth_step(Jet::variable(4, -0.2), order).value() == 0.0);
    CHECK(smooth_step(Jet::variable(4, 1.3), order).value() == 1.0);
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
      const double v = smooth_step(Jet::variable(2, i / 100.0), order).value();
      CHECK(v >= prev);
      prev = v;
    }
    CHECK(smooth_step(Jet::variable(2, 0.5), order).value() == doctest::Approx(0.5).epsilon(1e-14));
  }
  // C^3 polynomial step: derivatives up to 3 vanish at the ends.
  const Jet s0 = smooth_step(Jet::variable(5, 1e-13), 3);
  for (int k = 1; k <= 3; ++k) CHECK(std::abs(s0.derivative(k)) < 1e-10);
}

TEST_CASE("profile smoothness and validation") {
  CHECK(Profile::log_linear().smoothness() == Profile::kSmooth);
  Profile p = Profile::rational(3);
  p.cutoff_order = 4;
  CHECK(p.smoothness() == 4);
  CHECK_THROWS_AS(Profile::rational(3, 1.0, -1.0).validate(), PreconditionError);
  CHECK_THROWS_AS(Profile::bump(0.0, 0.0).validate(), PreconditionError);
  CHECK(Profile::zero()(1.23) == 0.0);
  CHECK(Profile::bump(0.5, 0.2)(0.9) == 0.0);
  CHECK(Profile::bump(0.5, 0.2)(0.5) == doctest::Approx(1.0));
}

TEST_CASE("closed-form profiles in rho = -u") {
  const Profile f = Profile::log_linear();
  CHECK(f(-3.0) == doctest::Approx(3.0 * std::log(4.0)).epsilon(1e-15));
  CHECK(f(0.5) == 0.0);
  const Profile g = Profile::rational(3);
  CHECK(g(-3.0) == doctest::Approx(27.0 / 4.0).epsilon(1e-15));
  double d[4];
  g.derivatives(-3.0, 3, d);
  // d/du = -d/drho; d/drho rho^3/(1+rho) = (2 rho^3 + 3 rho^2)/(1+rho)^2
  CHECK(d[1] == doctest::Approx(-(2 * 27.0 + 27.0) / 16.0).epsilon(1e-14));
}

TEST_CASE("Marchal radial functions match the independent oracle") {
  check_samples(oracle::kLogLinearG1, 1, Profile::log_linear(), 0, 1e-12);
  check_samples(oracle::kRationalG2, 2, Profile::rational(3), 0, 1e-12);
  check_samples(oracle::kRationalP2G1, 1, Profile::rational(2), 0, 1e-12);
  const auto& h = oracle::kRationalP4H3;
  const RadialValues v = marchal_radial(3, Profile::rational(4), Direction::Outgoing, h.t, h.r, 2);
  CHECK(v.g == doctest::Approx(h.g).epsilon(1e-12));
  CHECK(v.g_t == doctest::Approx(h.g_t).epsilon(1e-12));
  CHECK(v.g_r == doctest::Approx(h.g_r).epsilon(1e-12));
}

TEST_CASE("Marchal coefficients for n = 1") {
  // (1/r d/dr)(f(t - r)/r) = -f'/r^2 - f/r^3
  const auto c = marchal_coefficients(1, Direction::Outgoing);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == doctest::Approx(-1.0));
  CHECK(c[1] == doctest::Approx(-1.0));
  const auto ci = marchal_coefficients(1, Direction::Incoming);
  CHECK(ci[0] == doctest::Approx(-1.0));
  CHECK(ci[1] == doctest::Approx(1.0));
}

TEST_CASE("n = 1 growth rho^1 gives r^2 g1 g2 -> 0; growth rho log rho keeps it finite") {
  // The literal growth condition cancels the 1/r tail of g1 (see the oracle).
  const Profile f2 = Profile::rational(3);
  auto product = [&](const Profile& f1, double r) {
    return r * r * marchal_radial(1, f1, Direction::Outgoing, 0.0, r).g *
           marchal_radial(2, f2, Direction::Outgoing, 0.0, r).g;
  };
  CHECK(std::abs(product(Profile::rational(2), 1e5)) < 1e-4);
  CHECK(product(Profile::log_linear(), 1e5) == doctest::Approx(1.0).epsilon(1e-4));
  // Exact forms at t = 0: g1 = -1/(r+1), g2 = -r (r+3)/(r+1)^3.
  const double r = 7.0;
  CHECK(marchal_radial(1, Profile::log_linear(), Direction::Outgoing, 0.0, r).g ==
        doctest::Approx(-1.0 / (r + 1)).epsilon(1e-14));
  CHECK(marchal_radial(2, f2, Direction::Outgoing, 0.0, r).g ==
        doctest::Approx(-r * (r + 3) / std::pow(r + 1, 3)).epsilon(1e-14));
}

TEST_CASE("radial functions reject r <= 0") {
  CHECK_THROWS_AS(marchal_radial(1, Profile::log_linear(), Direction::Outgoing, 0.0, 0.0), DomainError);
}

TEST_CASE("polynomial bump") {
  Profile b = Profile::bump(1.0, 2.0, 3.0);
  b.cutoff_order = 3;
  CHECK(b.smoothness() == 3);
  CHECK(b(1.0) == doctest::Approx(3.0));
  CHECK(b(3.0) == 0.0);
  CHECK(b(-1.5) == 0.0);
  // (1 - x^2)^4 with x = (u - 1)/2 at u = 2: 3 (3/4)^4
  CHECK(b(2.0) == doctest::Approx(3.0 * std::pow(0.75, 4)));
  double d[3];
  b.derivatives(2.0, 2, d);
  const double h = 1e-4;
  CHECK(d[1] == doctest::Approx((b(2.0 + h) - b(2.0 - h)) / (2 * h)).epsilon(1e-7));
  CHECK(d[2] == doctest::Approx((b(2.0 + h) - 2 * b(2.0) + b(2.0 - h)) / (h * h)).epsilon(1e-5));
}
