#include "doctest.h"
#include "photon/clifford.hpp"
#include "photon/errors.hpp"
#include "test_util.hpp"

using namespace photon;
using testutil::max_abs;

TEST_CASE("gamma matrices satisfy the Clifford relations exactly") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Bispinor ac = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      Bispinor expected = Bispinor::Zero();
      if (mu == nu) expected = 2.0 * eta(mu) * Bispinor::Identity();
      CHECK(ac == expected);
    }
  CHECK(gamma(0) * gamma(0) == Bispinor::Identity());
  CHECK(gamma(1) * gamma(1) == Bispinor(-Bispinor::Identity()));
  CHECK_THROWS_AS(gamma(4), PreconditionError);
  CHECK_THROWS_AS(gamma(-1), PreconditionError);
}

TEST_CASE("gamma5 is diag(1,1,-1,-1) and anticommutes with gamma^mu") {
  Bispinor expected = Bispinor::Zero();
  expected.diagonal() << 1, 1, -1, -1;
  CHECK(gamma5() == expected);
  CHECK(gamma5() * gamma5() == Bispinor::Identity());
  for (int mu = 0; mu < 4; ++mu) CHECK(gamma5() * gamma(mu) + gamma(mu) * gamma5() == Bispinor::Zero());
}

TEST_CASE("scalar part") {
  CHECK(scalar_part(Bispinor::Identity()) == cplx(1.0));
  CHECK(scalar_part(gamma(1)) == cplx(0.0));
  Bispinor a = 3.0 * Bispinor::Identity() + 2.0 * gamma(0) * gamma(1);
  CHECK(scalar_part(a) == cplx(3.0));

  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    Bispinor x = testutil::random_bispinor(rng), y = testutil::random_bispinor(rng);
    CHECK(std::abs(scalar_part(x * y) - scalar_part(y * x)) < 1e-12);
  }
}

TEST_CASE("Dirac adjoint is an anti-involution") {
  CHECK(dirac_adjoint(Bispinor::Identity()) == Bispinor::Identity());
  CHECK(dirac_adjoint(gamma(0)) == gamma(0));
  CHECK(dirac_adjoint(gamma5()) == Bispinor(-gamma5()));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    Bispinor a = testutil::random_bispinor(rng), b = testutil::random_bispinor(rng);
    CHECK(max_abs(dirac_adjoint(a * b) - dirac_adjoint(b) * dirac_adjoint(a)) < 1e-12);
    CHECK(max_abs(dirac_adjoint(dirac_adjoint(a)) - a) < 1e-12);
  }
}

TEST_CASE("chiral projections are complementary orthogonal idempotents") {
  const auto& p = chiral_projections();
  CHECK(p.plus * p.plus == p.plus);
  CHECK(p.minus * p.minus == p.minus);
  CHECK(p.plus + p.minus == Bispinor::Identity());
  CHECK(p.plus * p.minus == Bispinor::Zero());
}

TEST_CASE("block projection keeps phi and zeroes chi") {
  CHECK(block_projection(Bispinor::Identity()) == Bispinor::Identity());
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    Bispinor psi = testutil::random_bispinor(rng);
    Bispinor p = block_projection(psi);
    CHECK(max_abs(block_projection(p) - p) == 0.0);
    Blocks b = split(p), full = split(psi);
    CHECK(b.chi_plus.isZero(0));
    CHECK(b.chi_minus.isZero(0));
    CHECK(max_abs(b.phi_plus - full.phi_plus) == 0.0);
    CHECK(max_abs(b.phi_minus - full.phi_minus) == 0.0);

    Blocks off = full;
    off.phi_plus.setZero();
    off.phi_minus.setZero();
    CHECK(block_projection(assemble(off)) == Bispinor::Zero());

    // commutes with multiplication by diagonal-block elements
    Bispinor d = block_projection(testutil::random_bispinor(rng));
    CHECK(max_abs(block_projection(d * psi) - d * block_projection(psi)) < 1e-12);
    CHECK(max_abs(block_projection(psi * d) - block_projection(psi) * d) < 1e-12);
  }
}

TEST_CASE("split and assemble are inverse re-indexings") {
  std::mt19937_64 rng(4);
  Bispinor psi = testutil::random_bispinor(rng);
  Blocks b = split(psi);
  CHECK(b.phi_plus(1, 0) == psi(1, 0));
  CHECK(b.chi_minus(0, 1) == psi(0, 3));
  CHECK(b.chi_plus(1, 1) == psi(3, 1));
  CHECK(b.phi_minus(0, 0) == psi(2, 2));
  CHECK(assemble(b) == psi);
}

TEST_CASE("basis of the algebra") {
  const auto& idx = basis_indices();
  int grades[5] = {0, 0, 0, 0, 0};
  for (const auto& b : idx) grades[b.grade]++;
  CHECK(grades[0] == 1);
  CHECK(grades[1] == 4);
  CHECK(grades[2] == 6);
  CHECK(grades[3] == 4);
  CHECK(grades[4] == 1);

  // Gram matrix under tr(a^dagger b) is 4 times the identity, hence nonsingular
  Eigen::Matrix<cplx, 16, 16> gram;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) gram(i, j) = (basis_element(idx[i]).adjoint() * basis_element(idx[j])).trace();
  CHECK((gram - 4.0 * Eigen::Matrix<cplx, 16, 16>::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(gram.determinant()) > 0.0);
}

TEST_CASE("basis expansion") {
  BasisExpansion e = basis_expand(gamma(2));
  BasisIndex g2{1, {2, 0, 0, 0}};
  for (const auto& b : basis_indices()) CHECK(std::abs(e[b] - (b == g2 ? cplx(1.0) : cplx(0.0))) < 1e-15);

  // gamma5 = c gamma^0 gamma^1 gamma^2 gamma^3 with c = i
  BasisExpansion e5 = basis_expand(gamma5());
  BasisIndex top{4, {0, 1, 2, 3}};
  CHECK(std::abs(e5[top] - I) < 1e-15);
  CHECK(top.label() == "g0g1g2g3");

  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    Bispinor a = testutil::random_bispinor(rng);
    CHECK(max_abs(basis_synthesize(basis_expand(a)) - a) < 1e-12);
  }
}
