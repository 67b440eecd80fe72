#pragma once

#include <array>
#include <cassert>
#include <cmath>

namespace photon {

// Truncated Taylor series c_k = f^(k)(x0)/k!, k = 0..order, for exact derivatives of closed-form profiles.
class Jet {
 public:
  static constexpr int kMaxOrder = 15;

  explicit Jet(int order, double value = 0.0) : order_(order) {
    assert(order >= 0 && order <= kMaxOrder);
    c_.fill(0.0);
    c_[0] = value;
  }
  static Jet variable(int order, double x0) {
    Jet j(order, x0);
    if (order > 0) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return order_; }
  double operator[](int k) const { return c_[k]; }
  double& operator[](int k) { return c_[k]; }
  double value() const { return c_[0]; }

  // f^(k) = k! c_k
  double derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * c_[k];
  }

  Jet operator-() const {
    Jet r(order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
    return r;
  }
  Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(double s) {
    for (int k = 0; k <= order_; ++k) c_[k] *= s;
    return *this;
  }
  Jet& operator+=(double s) {
    c_[0] += s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a += -s; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order_);
    for (int k = 0; k <= a.order_; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet q(a.order_);
    for (int k = 0; k <= a.order_; ++k) {
      double s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
      q.c_[k] = s / b.c_[0];
    }
    return q;
  }
  friend Jet operator/(double s, const Jet& b) { return Jet(b.order_, s) / b; }

  friend Jet exp(const Jet& a) {
    Jet e(a.order_);
    e.c_[0] = std::exp(a.c_[0]);
    for (int k = 1; k <= a.order_; ++k) {
      double s = 0.0;
      for (int j = 1; j <= k; ++j) s += j * a.c_[j] * e.c_[k - j];
      e.c_[k] = s / k;
    }
    return e;
  }

  friend Jet log(const Jet& a) {
    Jet l(a.order_);
    l.c_[0] = std::log(a.c_[0]);
    for (int k = 1; k <= a.order_; ++k) {
      double s = a.c_[k];
      for (int j = 1; j < k; ++j) s -= (double(j) / k) * l.c_[j] * a.c_[k - j];
      l.c_[k] = s / a.c_[0];
    }
    return l;
  }

  friend Jet pow(const Jet& a, int p) {
    assert(p >= 0);
    Jet r(a.order_, 1.0);
    for (int i = 0; i < p; ++i) r = r * a;
    return r;
  }

 private:
  int order_;
  std::array<double, kMaxOrder + 1> c_;
};

}  // namespace photon
