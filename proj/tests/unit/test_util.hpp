#pragma once

#include <random>

#include "photon/clifford.hpp"

namespace testutil {

inline photon::Bispinor random_bispinor(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  photon::Bispinor a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = {n(rng), n(rng)};
  return a;
}

inline photon::Quaternion random_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  photon::Quaternion a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = {n(rng), n(rng)};
  return a;
}

inline photon::Vec3 random_vec(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n;
  return scale * photon::Vec3(n(rng), n(rng), n(rng));
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.cwiseAbs().maxCoeff();
}

}  // namespace testutil
