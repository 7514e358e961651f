#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "asymass/errors.hpp"
#include "asymass/geomcore/types.hpp"

namespace asymass {

enum class BackendKind { analytic, fd2, fd4 };

/// Differentiation backend. Finite-difference steps are relative: the step
/// along axis i is eps * max(1, |x_i|).
struct Backend {
  BackendKind kind = BackendKind::analytic;
  double first_step = 1e-5;
  double second_step = 1e-4;

  static Backend analytic() { return {}; }
  static Backend fd2() { return {BackendKind::fd2}; }
  static Backend fd4() { return {BackendKind::fd4}; }
};

std::string_view to_string(BackendKind kind);
BackendKind backend_from_string(std::string_view name);

namespace fd {

inline double step(double eps, double x) { return eps * std::max(1.0, std::abs(x)); }

/// d f / d x^k by central differences. F maps a Point to anything closed
/// under addition and scalar multiplication.
template <class F>
auto first(const F& f, const Point& x, int k, BackendKind kind, double eps) {
  const double h = step(eps, x(k));
  Point xp = x, xm = x;
  xp(k) += h;
  xm(k) -= h;
  if (kind == BackendKind::fd2) return ((f(xp) - f(xm)) * (0.5 / h)).eval();
  Point xpp = x, xmm = x;
  xpp(k) += 2.0 * h;
  xmm(k) -= 2.0 * h;
  return ((f(xmm) - f(xpp) + (f(xp) - f(xm)) * 8.0) * (1.0 / (12.0 * h))).eval();
}

/// d^2 f / d x^k d x^l by central differences.
template <class F>
auto second(const F& f, const Point& x, int k, int l, BackendKind kind, double eps) {
  const double hk = step(eps, x(k));
  auto shifted = [&](double ak, double al) {
    Point y = x;
    y(k) += ak;
    if (l != k) y(l) += al;
    return f(y);
  };
  if (k == l) {
    if (kind == BackendKind::fd2)
      return ((shifted(hk, 0) + shifted(-hk, 0) - f(x) * 2.0) * (1.0 / (hk * hk))).eval();
    return (((shifted(hk, 0) + shifted(-hk, 0)) * 16.0 - shifted(2 * hk, 0) -
             shifted(-2 * hk, 0) - f(x) * 30.0) *
            (1.0 / (12.0 * hk * hk)))
        .eval();
  }
  const double hl = step(eps, x(l));
  if (kind == BackendKind::fd2)
    return ((shifted(hk, hl) - shifted(hk, -hl) - shifted(-hk, hl) + shifted(-hk, -hl)) *
            (1.0 / (4.0 * hk * hl)))
        .eval();
  // Tensor product of the fourth-order first-derivative stencil.
  static constexpr double c[4] = {1.0, -8.0, 8.0, -1.0};
  static constexpr double o[4] = {-2.0, -1.0, 1.0, 2.0};
  auto acc = (f(x) * 0.0).eval();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) acc += shifted(o[a] * hk, o[b] * hl) * (c[a] * c[b]);
  return (acc * (1.0 / (144.0 * hk * hl))).eval();
}

/// Scalar overloads: doubles have no eval().
template <class F>
double first_scalar(const F& f, const Point& x, int k, BackendKind kind, double eps) {
  const double h = step(eps, x(k));
  Point xp = x, xm = x;
  xp(k) += h;
  xm(k) -= h;
  if (kind == BackendKind::fd2) return (f(xp) - f(xm)) * (0.5 / h);
  Point xpp = x, xmm = x;
  xpp(k) += 2.0 * h;
  xmm(k) -= 2.0 * h;
  return (f(xmm) - f(xpp) + 8.0 * (f(xp) - f(xm))) / (12.0 * h);
}

template <class F>
double second_scalar(const F& f, const Point& x, int k, int l, BackendKind kind,
                     double eps) {
  auto wrapped = [&](const Point& y) {
    Vec v(1);
    v(0) = f(y);
    return v;
  };
  return second(wrapped, x, k, l, kind, eps)(0);
}

}  // namespace fd
}  // namespace asymass
