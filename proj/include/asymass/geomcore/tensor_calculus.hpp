#pragma once

#include "asymass/geomcore/fields.hpp"
#include "asymass/geomcore/metric_field.hpp"
#include "asymass/geomcore/types.hpp"

namespace asymass {

/// Metric, inverse, connection and (optionally) connection derivatives at a
/// single point. Built once and shared by every quantity evaluated there.
struct LocalGeometry {
  int n = 0;
  int order = 0;
  Point p;
  Mat g;
  Mat ginv;
  MatGrad dg;
  MatHess d2g;
  Christoffel gamma;
  /// dgamma[m][k](i, j) = d_m Gamma^k_ij (order 2 only).
  std::array<Christoffel, kMaxDim> dgamma;
};

/// order 1: metric and Christoffel symbols; order 2: adds their derivatives.
LocalGeometry local_geometry(const MetricField& metric, const Point& p, int order);

/// Inverse of a symmetric positive-definite matrix; throws
/// SingularMetricError otherwise.
Mat inverse_metric(const Mat& g, const Point& p);

/// Levi-Civita connection, Gamma^k_ij = gamma[k](i, j).
Christoffel christoffel(const MetricField& metric, const Point& p);

struct Curvature {
  Mat ricci;
  double scalar = 0.0;
};

/// R^i_{jkl} = d_k Gamma^i_{lj} - d_l Gamma^i_{kj} + Gamma Gamma terms,
/// Ric_{jl} = R^k_{jkl}. With this convention the hyperbolic metric has
/// scalar curvature -n(n-1).
Curvature curvature(const LocalGeometry& geo);
Curvature curvature(const MetricField& metric, const Point& p);

/// E = Ric - (R/2) g.
Mat einstein_tensor(const LocalGeometry& geo);
Mat einstein_tensor(const MetricField& metric, const Point& p);

/// Covariant derivative of a symmetric 2-tensor: out[k](i, j) = nabla_k K_ij.
MatGrad covariant_derivative(const LocalGeometry& geo, const Mat& k, const MatGrad& dk);

/// (div K)_j = g^{ik} nabla_k K_ij. K is differentiated with the metric's backend.
Vec div_sym2(const MetricField& metric, const Sym2Field& k, const Point& p);
Vec div_sym2(const LocalGeometry& geo, const Mat& k, const MatGrad& dk);

struct KillingDeformation {
  Mat full;        // (1/2) L_Y g
  Mat trace_free;  // full - (div / n) g
  double div = 0.0;
};

KillingDeformation killing_deformation(const MetricField& metric, const VectorField& y,
                                       const Point& p);
KillingDeformation killing_deformation(const LocalGeometry& geo, const Vec& y,
                                       const Mat& jacobian);

/// Covariant Hessian nabla^2 w from the coordinate gradient and Hessian.
Mat covariant_hessian(const LocalGeometry& geo, const Vec& grad, const Mat& hess);

/// g(K, L) = g^{ia} g^{jb} K_ij L_ab.
double inner_sym2(const Mat& ginv, const Mat& k, const Mat& l);

}  // namespace asymass
