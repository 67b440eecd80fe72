#pragma once

#include "photon/polynomial.hpp"
#include "photon/profiles.hpp"

namespace photon {

enum class Direction { Outgoing, Incoming };

struct RadialValues {
  double g = 0.0, g_t = 0.0, g_r = 0.0;
};

// (-r)^n (1/r d/dr)^n applied to f^(shift)(t -+ r)/r, with its t and r derivatives.
// shift = 0 gives g_n, shift = 2 gives h_n.
RadialValues marchal_radial(int n, const Profile& f, Direction d, double t, double r, int shift = 0);

// Coefficients c_k with (1/r d/dr)^n (f(t -+ r)/r) = sum_k c_k f^(k) r^-(2n+1-k).
std::vector<double> marchal_coefficients(int n, Direction d);

// a_n = P_n(s)/|s|^n g_n(t,|s|) + P_{n-2}(s)/|s|^{n-2} h_n(t,|s|)
struct MultipoleMode {
  int n = 1;
  VecPoly P;    // harmonic, homogeneous of degree n
  VecPoly Pm2;  // harmonic, homogeneous of degree n-2 (zero for n < 3)
  Profile f;
  Direction direction = Direction::Outgoing;

  // Harmonicity, homogeneity, transversality and profile smoothness; throws PreconditionError.
  void validate() const;

  struct Sample {
    Vec3 a = Vec3::Zero();
    Vec3 a_t = Vec3::Zero();
    Eigen::Matrix3d grad = Eigen::Matrix3d::Zero();  // (i, j) = d_j a_i
  };
  Sample sample(double t, const Vec3& s) const;
};

Vec3 marchal_mode_eval(const MultipoleMode& mode, double t, const Vec3& s);

// The two modes of the worked example: P1 = (0, -s3, s2), P2 = (-s2 s3, s1 s3, 0).
VecPoly example_P1();
VecPoly example_P2();

}  // namespace photon
