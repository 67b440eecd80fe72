#include "photon/gauge.hpp"

#include <cmath>

#include "photon/errors.hpp"

namespace photon {

namespace {

struct RadialJet {
  double H, Ht, Hr, Htt, Htr, Hrr;
};

RadialJet radial(const Profile& F, double t, double r) {
  double fm[3], fp[3];
  F.derivatives(t - r, 2, fm);
  F.derivatives(t + r, 2, fp);
  const double N = fm[0] - fp[0], Nt = fm[1] - fp[1], Nr = -fm[1] - fp[1];
  const double Ntt = fm[2] - fp[2], Ntr = -fm[2] - fp[2], Nrr = fm[2] - fp[2];
  RadialJet j;
  j.H = N / r;
  j.Ht = Nt / r;
  j.Hr = Nr / r - N / (r * r);
  j.Htt = Ntt / r;
  j.Htr = Ntr / r - Nt / (r * r);
  j.Hrr = Nrr / r - 2.0 * Nr / (r * r) + 2.0 * N / (r * r * r);
  return j;
}

Quaternion d_operator(const Eigen::Vector4d& d, double sign) {
  // d_t h + sign sigma.grad h
  return d(0) * Quaternion::Identity() + sign * pauli_dot(Vec3(d.tail<3>()));
}

}  // namespace

SphericalWave::Sample SphericalWave::sample(double t, const Vec3& s) const {
  Sample out;
  if (is_zero()) return out;
  const Vec3 x = s - center;
  const double r = x.norm();
  if (!(r > 0.0)) throw DomainError("spherical wave evaluated at its center");
  const Vec3 n = x / r;
  const RadialJet j = radial(F, t, r);
  out.h = j.H;
  out.dh(0) = j.Ht;
  out.dh.tail<3>() = j.Hr * n;
  out.ddh(0, 0) = j.Htt;
  out.ddh.block<3, 1>(1, 0) = j.Htr * n;
  out.ddh.block<1, 3>(0, 1) = j.Htr * n.transpose();
  out.ddh.block<3, 3>(1, 1) = j.Hrr * n * n.transpose() + (j.Hr / r) * (Eigen::Matrix3d::Identity() - n * n.transpose());
  return out;
}

double GaugeFunction::wave_residual(const std::vector<std::pair<double, Vec3>>& events) const {
  double worst = 0.0;
  for (const auto* w : {&h_plus, &h_minus}) {
    if (w->is_zero()) continue;
    for (const auto& [t, s] : events) {
      const auto smp = w->sample(t, w->center + s);
      const double lap = smp.ddh(1, 1) + smp.ddh(2, 2) + smp.ddh(3, 3);
      const double scale = std::abs(smp.ddh(0, 0)) + std::abs(smp.ddh(1, 1)) + std::abs(smp.ddh(2, 2)) +
                           std::abs(smp.ddh(3, 3));
      if (scale > 0.0) worst = std::max(worst, std::abs(smp.ddh(0, 0) - lap) / scale);
    }
  }
  return worst;
}

GaugeTransformedField::GaugeTransformedField(FieldPtr base, GaugeFunction gauge)
    : PhotonField(base->constants()), base_(std::move(base)), gauge_(std::move(gauge)) {}

Bispinor GaugeTransformedField::value(double t, const Vec3& s) const {
  Bispinor psi = base_->value(t, s);
  if (!gauge_.h_plus.is_zero()) psi.block<2, 2>(2, 0) += d_operator(gauge_.h_plus.sample(t, s).dh, 1.0);
  if (!gauge_.h_minus.is_zero()) psi.block<2, 2>(0, 2) += d_operator(gauge_.h_minus.sample(t, s).dh, -1.0);
  return psi;
}

std::array<Bispinor, 4> GaugeTransformedField::chi_gradient(double t, const Vec3& s) const {
  auto out = base_->chi_gradient(t, s);
  if (!gauge_.h_plus.is_zero()) {
    const auto smp = gauge_.h_plus.sample(t, s);
    for (int mu = 0; mu < 4; ++mu) out[mu].block<2, 2>(2, 0) += d_operator(smp.ddh.col(mu), 1.0);
  }
  if (!gauge_.h_minus.is_zero()) {
    const auto smp = gauge_.h_minus.sample(t, s);
    for (int mu = 0; mu < 4; ++mu) out[mu].block<2, 2>(0, 2) += d_operator(smp.ddh.col(mu), -1.0);
  }
  return out;
}

FieldPtr gauge_transform(FieldPtr field, const GaugeFunction& gauge, double tol) {
  std::vector<std::pair<double, Vec3>> events;
  for (int k = 0; k < 16; ++k) {
    const double r = 0.5 + 0.37 * k;
    events.push_back({0.05 * (k % 5), Vec3(r * std::cos(1.3 * k), r * std::sin(1.3 * k) * 0.6, r * 0.8 * std::sin(0.7 * k))});
  }
  const double res = gauge.wave_residual(events);
  if (res > tol) throw PreconditionError("gauge function violates the wave equation (relative residual " +
                                         std::to_string(res) + ")");
  return std::make_shared<GaugeTransformedField>(std::move(field), gauge);
}

}  // namespace photon
