#include "photon/clifford.hpp"

#include "photon/errors.hpp"

namespace photon {

namespace {

std::array<Quaternion, 4> make_pauli() {
  std::array<Quaternion, 4> s;
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -I, I, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

std::array<Bispinor, 4> make_gammas() {
  std::array<Bispinor, 4> g;
  const auto& s = make_pauli();
  g[0].setZero();
  g[0].block<2, 2>(0, 2) = s[0];
  g[0].block<2, 2>(2, 0) = s[0];
  for (int k = 1; k < 4; ++k) {
    g[k].setZero();
    g[k].block<2, 2>(0, 2) = -s[k];
    g[k].block<2, 2>(2, 0) = s[k];
  }
  return g;
}

void check_index(int mu) {
  if (mu < 0 || mu > 3) throw PreconditionError("gamma index out of range: " + std::to_string(mu));
}

// Columns are the vectorized basis elements; LU factorized once.
const Eigen::FullPivLU<Eigen::Matrix<cplx, 16, 16>>& basis_solver() {
  static const auto lu = [] {
    Eigen::Matrix<cplx, 16, 16> m;
    const auto& idx = basis_indices();
    for (int k = 0; k < 16; ++k) {
      Bispinor b = basis_element(idx[k]);
      m.col(k) = Eigen::Map<const Eigen::Matrix<cplx, 16, 1>>(b.data());
    }
    return Eigen::FullPivLU<Eigen::Matrix<cplx, 16, 16>>(m);
  }();
  return lu;
}

}  // namespace

const Quaternion& pauli(int k) {
  static const auto s = make_pauli();
  check_index(k);
  return s[k];
}

Quaternion pauli_dot(const Vec3& v) {
  return v(0) * pauli(1) + v(1) * pauli(2) + v(2) * pauli(3);
}

Quaternion pauli_dot(const CVec3& v) {
  return v(0) * pauli(1) + v(1) * pauli(2) + v(2) * pauli(3);
}

std::array<cplx, 4> pauli_coords(const Quaternion& q) {
  // tr(sigma_j sigma_k) = 2 delta_jk
  std::array<cplx, 4> c;
  for (int k = 0; k < 4; ++k) c[k] = 0.5 * (pauli(k) * q).trace();
  return c;
}

const Bispinor& gamma(int mu) {
  static const auto g = make_gammas();
  check_index(mu);
  return g[mu];
}

const Bispinor& gamma5() {
  static const Bispinor g5 = I * gamma(0) * gamma(1) * gamma(2) * gamma(3);
  return g5;
}

Bispinor gamma_lower(int mu) { return eta(mu) * gamma(mu); }

cplx scalar_part(const Bispinor& a) { return 0.25 * a.trace(); }

Bispinor dirac_adjoint(const Bispinor& a) { return gamma(0) * a.adjoint() * gamma(0); }

const ChiralProjections& chiral_projections() {
  static const ChiralProjections p{0.5 * (Bispinor::Identity() + gamma5()),
                                   0.5 * (Bispinor::Identity() - gamma5())};
  return p;
}

Bispinor block_projection(const Bispinor& psi) {
  const auto& p = chiral_projections();
  return p.plus * psi * p.plus + p.minus * psi * p.minus;
}

Blocks split(const Bispinor& psi) {
  return {psi.block<2, 2>(0, 0), psi.block<2, 2>(0, 2), psi.block<2, 2>(2, 0), psi.block<2, 2>(2, 2)};
}

Bispinor assemble(const Blocks& b) {
  Bispinor psi;
  psi.block<2, 2>(0, 0) = b.phi_plus;
  psi.block<2, 2>(0, 2) = b.chi_minus;
  psi.block<2, 2>(2, 0) = b.chi_plus;
  psi.block<2, 2>(2, 2) = b.phi_minus;
  return psi;
}

bool BasisIndex::operator==(const BasisIndex& o) const {
  if (grade != o.grade) return false;
  for (int k = 0; k < grade; ++k)
    if (indices[k] != o.indices[k]) return false;
  return true;
}

std::string BasisIndex::label() const {
  if (grade == 0) return "1";
  std::string s;
  for (int k = 0; k < grade; ++k) s += "g" + std::to_string(indices[k]);
  return s;
}

const std::array<BasisIndex, 16>& basis_indices() {
  static const auto idx = [] {
    std::array<BasisIndex, 16> out;
    int n = 0;
    for (int grade = 0; grade <= 4; ++grade)
      for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) != grade) continue;
        BasisIndex b;
        b.grade = grade;
        int k = 0;
        for (int mu = 0; mu < 4; ++mu)
          if (mask & (1 << mu)) b.indices[k++] = mu;
        out[n++] = b;
      }
    return out;
  }();
  return idx;
}

Bispinor basis_element(const BasisIndex& idx) {
  if (idx.grade < 0 || idx.grade > 4) throw PreconditionError("basis grade out of range");
  Bispinor b = Bispinor::Identity();
  for (int k = 0; k < idx.grade; ++k) {
    if (k > 0 && idx.indices[k] <= idx.indices[k - 1])
      throw PreconditionError("basis indices must be strictly increasing");
    b = b * gamma(idx.indices[k]);
  }
  return b;
}

cplx BasisExpansion::operator[](const BasisIndex& idx) const {
  const auto& all = basis_indices();
  for (int k = 0; k < 16; ++k)
    if (all[k] == idx) return coefficients[k];
  throw PreconditionError("unknown basis index");
}

BasisExpansion basis_expand(const Bispinor& a) {
  Eigen::Matrix<cplx, 16, 1> rhs = Eigen::Map<const Eigen::Matrix<cplx, 16, 1>>(a.data());
  Eigen::Matrix<cplx, 16, 1> c = basis_solver().solve(rhs);
  BasisExpansion e;
  for (int k = 0; k < 16; ++k) e.coefficients[k] = c(k);
  return e;
}

Bispinor basis_synthesize(const BasisExpansion& e) {
  Bispinor a = Bispinor::Zero();
  const auto& idx = basis_indices();
  for (int k = 0; k < 16; ++k) a += e.coefficients[k] * basis_element(idx[k]);
  return a;
}

}  // namespace photon
