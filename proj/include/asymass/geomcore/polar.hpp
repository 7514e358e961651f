#pragma once

#include <cmath>

#include "asymass/geomcore/types.hpp"

namespace asymass {

/// Geodesic-polar description of a point of the hyperbolic half-space:
/// rho > 0 and theta on the unit upper hemisphere (theta_n >= 0).
struct PolarPoint {
  double rho = 0.0;
  Vec theta;
};

/// y = sinh(rho) theta, the spatial part of the Minkowski embedding
/// (y_0 = cosh rho). This is the chart all hyperbolic computations use.
inline Point chart_from_polar(const PolarPoint& q) { return std::sinh(q.rho) * q.theta; }

inline PolarPoint polar_from_chart(const Point& y) {
  const double s = y.norm();
  return {std::asinh(s), y / s};
}

/// Chart radius of the coordinate hemisphere at geodesic radius rho.
inline double chart_radius(double rho) { return std::sinh(rho); }

}  // namespace asymass
