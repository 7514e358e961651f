#pragma once

#include <array>

#include <Eigen/Dense>

namespace asymass {

/// Largest manifold dimension supported. Matrices use fixed-capacity storage
/// so that pointwise tensor algebra never touches the heap.
inline constexpr int kMaxDim = 6;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                          kMaxDim, kMaxDim>;

/// A point given by its chart coordinates. For the half-space model these are
/// Cartesian x_1..x_n with x_n >= 0. The hyperbolic model uses the spatial
/// Minkowski coordinates y = sinh(rho) * theta (see geomcore/polar.hpp).
using Point = Vec;

/// Partial derivatives of a matrix-valued field: entry k holds d/dx^k.
using MatGrad = std::array<Mat, kMaxDim>;
/// Second partials: entry [k][l] holds d^2/dx^k dx^l.
using MatHess = std::array<std::array<Mat, kMaxDim>, kMaxDim>;

/// Connection coefficients: entry k holds the symmetric matrix Gamma^k_{ij}.
using Christoffel = std::array<Mat, kMaxDim>;

inline Vec zero_vec(int n) { return Vec::Zero(n); }
inline Mat zero_mat(int n) { return Mat::Zero(n, n); }
inline Mat identity(int n) { return Mat::Identity(n, n); }

inline Vec unit_vec(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

}  // namespace asymass
