#pragma once

#include <array>
#include <map>

#include "photon/clifford.hpp"

namespace photon {

using Exponents = std::array<int, 3>;
using ScalarPoly = std::map<Exponents, double>;

// Vector-valued polynomial in s = (s1, s2, s3) with exact coefficient bookkeeping.
class VecPoly {
 public:
  VecPoly() = default;

  VecPoly& add_term(const Exponents& e, const Vec3& c);
  const std::map<Exponents, Vec3>& terms() const { return terms_; }

  bool is_zero(double tol = 0.0) const;
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int deg) const;

  Vec3 operator()(const Vec3& s) const;
  Eigen::Matrix3d jacobian(const Vec3& s) const;  // (i, j) = d_j P_i

  VecPoly derivative(int j) const;
  VecPoly laplacian() const;
  VecPoly times_r2() const;
  ScalarPoly dot_s() const;  // s . P

  VecPoly operator+(const VecPoly& o) const;
  double max_coefficient() const;

 private:
  std::map<Exponents, Vec3> terms_;
};

bool is_zero(const ScalarPoly& p, double tol = 0.0);

}  // namespace photon
