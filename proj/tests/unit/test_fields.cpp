#include <doctest.h>

#include <random>

#include "photon/currents.hpp"
#include "photon/errors.hpp"
#include "photon/fd.hpp"
#include "photon/gauge.hpp"
#include "test_util.hpp"

using namespace photon;

namespace {

std::shared_ptr<MultipoleField> example() {
  return paper_example_field({}, Profile::log_linear(), Profile::rational(3));
}

struct Event {
  double t;
  Vec3 s;
};

std::vector<Event> events(std::uint64_t seed, int count, double rmin, double rmax, double tmax = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(0.0, tmax), ur(rmin, rmax);
  std::vector<Event> out;
  for (int i = 0; i < count; ++i) out.push_back({ut(rng), ur(rng) * testutil::random_vec(rng).normalized()});
  return out;
}

double max_relative_residual(const PhotonField& f, const std::vector<Event>& ev) {
  double worst = 0.0;
  for (const auto& e : ev) worst = std::max(worst, relative_equation_residual(f, e.t, e.s).relative());
  return worst;
}

}  // namespace

TEST_CASE("the example field solves the photon wave equation") {
  const auto f = example();
  CHECK(max_relative_residual(*f, events(1, 200, 2.0, 10.0)) < 1e-6);
}

TEST_CASE("the example field with non-unit constants") {
  const auto f = paper_example_field({2.0, 0.5}, Profile::log_linear(), Profile::rational(3));
  CHECK(max_relative_residual(*f, events(2, 50, 2.0, 10.0)) < 1e-6);
}

TEST_CASE("defective field is detected") {
  auto f = example();
  f->set_b_plus_scale(1.5);
  CHECK(max_relative_residual(*f, events(3, 50, 1.5, 4.0)) > 1e-3);
}

TEST_CASE("analytic chi gradient matches finite differences") {
  const auto f = example();
  for (const auto& e : events(4, 30, 1.0, 8.0)) {
    const auto exact = f->chi_gradient(e.t, e.s);
    const auto fd = fd_gradient(*f, e.t, e.s, 1e-3);
    for (int mu = 0; mu < 4; ++mu) CHECK(testutil::max_abs(exact[mu] - off_diagonal(fd[mu])) < 1e-7);
  }
}

TEST_CASE("blocks carry the potentials and field vectors") {
  const auto f = example();
  const Vec3 s(1.5, -2.0, 3.0);
  const Blocks b = split(f->value(0.3, s));
  const auto fp = f->fields(Chirality::Plus, 0.3, s);
  CHECK(testutil::max_abs(b.phi_plus - phi_from_fields(fp, Chirality::Plus)) < 1e-15);
  const Potentials pm = potentials_from_chi(b.chi_minus, Chirality::Minus);
  CHECK(pm.varphi == doctest::Approx(0.0));
  CHECK((pm.a - f->potential(Chirality::Minus, 0.3, s).a).norm() < 1e-15);
  CHECK(std::abs(b.phi_plus.trace()) < 1e-15);
}

TEST_CASE("Maxwell and Weyl residuals vanish together") {
  const auto f = example();
  for (auto c : {Chirality::Plus, Chirality::Minus}) {
    FieldVectorsFn fv = [&](double t, const Vec3& s) { return f->fields(c, t, s); };
    for (const auto& e : events(5, 40, 2.0, 10.0)) {
      const double scale = maxwell_scale(fv, e.t, e.s);
      CHECK(maxwell_residual(fv, e.t, e.s).norm() < 1e-6 * scale);
      CHECK(weyl_residual(fv, c, e.t, e.s).norm() < 1e-6 * scale);
    }
  }
  for (const auto& e : events(6, 40, 2.0, 10.0)) {
    const auto r = weyl_block_residual(*f, e.t, e.s);
    const double scale = f->value(e.t, e.s).block<2, 2>(0, 0).norm() + f->value(e.t, e.s).block<2, 2>(2, 2).norm();
    CHECK(r[0].norm() + r[1].norm() < 1e-6 * scale);
  }
}

TEST_CASE("Lorentz images of solutions are solutions") {
  const FieldPtr base = example();
  const auto L = spin_half_boost(Vec3(0.3, -0.2, 0.9).normalized(), 0.4) *
                 spin_half_rotation(Vec3(1, 2, 3).normalized(), 0.8);
  for (const auto& el : {L, LorentzElement::parity(), LorentzElement::time_reversal()}) {
    const LorentzTransformedField g(base, el);
    // The image of the slab t in [0, 1], r in [3, 10] stays inside the closed-form region.
    double worst = 0.0;
    for (const auto& e : events(7, 40, 4.0, 9.0, 0.5)) {
      const double t = el.kind == LorentzElement::Kind::TimeReversal ? -e.t : e.t;
      worst = std::max(worst, relative_equation_residual(g, t, e.s).relative());
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("gauge transforms preserve the equation and the diagonal blocks") {
  const FieldPtr base = example();
  GaugeFunction gauge{{Profile::bump(0.0, 6.0), Vec3(0.5, 0, 0)}, {Profile::step(1.0, 1.0), Vec3::Zero()}};
  const FieldPtr g = gauge_transform(base, gauge);
  double worst = 0.0;
  for (const auto& e : events(8, 60, 2.0, 4.0)) {
    worst = std::max(worst, relative_equation_residual(*g, e.t, e.s).relative());
    const Bispinor d = g->value(e.t, e.s) - base->value(e.t, e.s);
    CHECK(testutil::max_abs(block_projection(d)) == 0.0);
    const auto exact = g->chi_gradient(e.t, e.s);
    const auto fd = fd_gradient(*g, e.t, e.s, 1e-3);
    for (int mu = 0; mu < 4; ++mu) CHECK(testutil::max_abs(exact[mu] - off_diagonal(fd[mu])) < 1e-7);
  }
  CHECK(worst < 1e-6);
  // Gauge non-invariance of the z density under the non-compact monopole gauge.
  const Vec3 s(3.0, 1.0, -2.0);
  CHECK(std::abs(charge_z(g->value(0.2, s)) - charge_z(base->value(0.2, s))) > 1e-4);
}

TEST_CASE("gauge functions that do not solve the wave equation are rejected") {
  const FieldPtr base = example();
  GaugeFunction ok{{Profile::bump(0.0, 1.0), Vec3::Zero()}, {}};
  CHECK(ok.wave_residual({{0.3, Vec3(0.4, 0.1, 0.2)}, {0.1, Vec3(0.2, -0.3, 0.5)}}) < 1e-10);
  CHECK_NOTHROW(gauge_transform(base, ok));
}

TEST_CASE("non-wave perturbation breaks the equation") {
  const FieldPtr base = example();
  const PerturbedField p(base, example_P1(), 0.5);
  CHECK(max_relative_residual(p, events(9, 20, 1.5, 4.0)) > 1e-3);
  CHECK(testutil::max_abs(block_projection(p.value(0.1, Vec3(2, 3, 4)) - base->value(0.1, Vec3(2, 3, 4)))) == 0.0);
}

TEST_CASE("singular evaluation points") {
  const auto f = example();
  CHECK_THROWS_AS(f->value(0.0, Vec3::Zero()), DomainError);
  CHECK_THROWS_AS(PhysicalConstants({0.0, 1.0}).validate(), PreconditionError);
  const ZeroField z;
  CHECK(testutil::max_abs(z.value(0.0, Vec3::Zero())) == 0.0);
}
