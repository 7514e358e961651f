#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "asymass/geomcore/types.hpp"

namespace asymass {

/// Second-order forward-mode jet: a value together with its exact gradient
/// and Hessian with respect to the n chart coordinates. Catalog metrics and
/// test fields are written once in terms of Jet and get analytic first and
/// second derivatives for free.
class Jet {
 public:
  Jet() = default;
  /// Constant jet in dimension n.
  Jet(int n, double value) : n_(n), value_(value) {}

  /// The coordinate function x^i.
  static Jet variable(int n, int i, double value) {
    Jet j(n, value);
    j.grad_[i] = 1.0;
    return j;
  }

  int dim() const { return n_; }
  double value() const { return value_; }
  double d(int i) const { return grad_[i]; }
  double dd(int i, int j) const { return hess_[i * kMaxDim + j]; }

  Vec gradient() const {
    Vec g(n_);
    for (int i = 0; i < n_; ++i) g(i) = grad_[i];
    return g;
  }
  Mat hessian() const {
    Mat h(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) h(i, j) = dd(i, j);
    return h;
  }

  /// Applies a scalar function with derivatives f0 = f(v), f1 = f'(v),
  /// f2 = f''(v) through the chain rule.
  Jet chain(double f0, double f1, double f2) const {
    Jet r(n_, f0);
    for (int i = 0; i < n_; ++i) r.grad_[i] = f1 * grad_[i];
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        r.hess_[i * kMaxDim + j] =
            f1 * hess_[i * kMaxDim + j] + f2 * grad_[i] * grad_[j];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    const int n = merge_dim(o);
    value_ += o.value_;
    for (int i = 0; i < n; ++i) grad_[i] += o.grad_[i];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) hess_[i * kMaxDim + j] += o.hess_[i * kMaxDim + j];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    const int n = merge_dim(o);
    value_ -= o.value_;
    for (int i = 0; i < n; ++i) grad_[i] -= o.grad_[i];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) hess_[i * kMaxDim + j] -= o.hess_[i * kMaxDim + j];
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    const int n = merge_dim(o);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double& h = hess_[i * kMaxDim + j];
        h = h * o.value_ + o.hess_[i * kMaxDim + j] * value_ + grad_[i] * o.grad_[j] +
            o.grad_[i] * grad_[j];
      }
    for (int i = 0; i < n; ++i) grad_[i] = grad_[i] * o.value_ + o.grad_[i] * value_;
    value_ *= o.value_;
    return *this;
  }
  Jet& operator/=(const Jet& o) { return *this *= o.reciprocal(); }

  Jet& operator+=(double c) {
    value_ += c;
    return *this;
  }
  Jet& operator-=(double c) {
    value_ -= c;
    return *this;
  }
  Jet& operator*=(double c) {
    value_ *= c;
    for (int i = 0; i < n_; ++i) grad_[i] *= c;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) hess_[i * kMaxDim + j] *= c;
    return *this;
  }
  Jet& operator/=(double c) { return *this *= 1.0 / c; }

  Jet reciprocal() const {
    const double inv = 1.0 / value_;
    return chain(inv, -inv * inv, 2.0 * inv * inv * inv);
  }

  Jet operator-() const {
    Jet r = *this;
    r *= -1.0;
    return r;
  }

 private:
  // Constants created with Jet(n, c) where n is unknown default to dim 0;
  // combining them with a full jet adopts the larger dimension.
  int merge_dim(const Jet& o) {
    if (o.n_ > n_) n_ = o.n_;
    return n_;
  }

  int n_ = 0;
  double value_ = 0.0;
  std::array<double, kMaxDim> grad_{};
  std::array<double, kMaxDim * kMaxDim> hess_{};
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator+(Jet a, double c) { return a += c; }
inline Jet operator+(double c, Jet a) { return a += c; }
inline Jet operator-(Jet a, double c) { return a -= c; }
inline Jet operator-(double c, const Jet& a) { return (-a) += c; }
inline Jet operator*(Jet a, double c) { return a *= c; }
inline Jet operator*(double c, Jet a) { return a *= c; }
inline Jet operator/(Jet a, double c) { return a /= c; }
inline Jet operator/(double c, const Jet& a) { return a.reciprocal() * c; }

inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.value());
  return a.chain(s, 0.5 / s, -0.25 / (s * a.value()));
}
inline Jet pow(const Jet& a, double p) {
  const double v = a.value();
  const double f0 = std::pow(v, p);
  return a.chain(f0, p * f0 / v, p * (p - 1.0) * f0 / (v * v));
}
inline Jet exp(const Jet& a) {
  const double e = std::exp(a.value());
  return a.chain(e, e, e);
}
inline Jet log(const Jet& a) {
  const double v = a.value();
  return a.chain(std::log(v), 1.0 / v, -1.0 / (v * v));
}
inline Jet sin(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.chain(s, c, -s);
}
inline Jet cos(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.chain(c, -s, -c);
}
inline Jet sinh(const Jet& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.chain(s, c, s);
}
inline Jet cosh(const Jet& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.chain(c, s, c);
}

/// Coordinate jets (x^1, ..., x^n) seeded at the point x.
inline std::vector<Jet> seed_jets(const Point& x) {
  const int n = static_cast<int>(x.size());
  std::vector<Jet> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Jet::variable(n, i, x(i)));
  return out;
}

/// Squared Euclidean norm of a jet vector.
inline Jet norm_squared(const std::vector<Jet>& v) {
  Jet s(v.empty() ? 0 : v.front().dim(), 0.0);
  for (const auto& c : v) s += c * c;
  return s;
}

}  // namespace asymass
