#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string_view>

#include "asymass/geomcore/backend.hpp"
#include "asymass/geomcore/jet.hpp"
#include "asymass/geomcore/types.hpp"

namespace asymass {

enum class MetricRole { physical, reference_flat, reference_hyperbolic };

std::string_view to_string(MetricRole role);

/// Upper-triangular storage for a symmetric matrix of jets.
class JetSym {
 public:
  explicit JetSym(int n) : n_(n) {
    for (auto& c : comps_) c = Jet(n, 0.0);
  }
  int dim() const { return n_; }
  Jet& operator()(int i, int j) { return comps_[index(i, j)]; }
  const Jet& operator()(int i, int j) const { return comps_[index(i, j)]; }

 private:
  static int index(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * kMaxDim - i * (i - 1) / 2 + (j - i);
  }
  int n_;
  std::array<Jet, kMaxDim*(kMaxDim + 1) / 2> comps_;
};

/// A metric together with derivatives of its components up to some order.
struct MetricJet {
  int order = 0;
  Mat g;
  MatGrad dg;   // dg[k](i,j) = d_k g_ij
  MatHess d2g;  // d2g[k][l](i,j) = d_k d_l g_ij
};

/// Unpacks a JetSym into value, first and second partials.
MetricJet unpack(const JetSym& comps, int order);

/// A smooth assignment point -> symmetric positive-definite matrix in one
/// chart, with an optional exact derivative evaluator. Immutable and cheap to
/// copy; safe to share between threads.
class MetricField {
 public:
  using ValueFn = std::function<Mat(const Point&)>;
  using AnalyticFn = std::function<MetricJet(const Point&, int order)>;
  using JetFn = std::function<JetSym(const std::vector<Jet>& x)>;

  MetricField(int dim, MetricRole role, ValueFn value, AnalyticFn analytic = {});

  /// Builds a metric whose components are written in terms of coordinate
  /// jets; value and exact derivatives both come from the jet evaluation.
  static MetricField from_jets(int dim, MetricRole role, JetFn components);

  int dim() const { return dim_; }
  MetricRole role() const { return role_; }
  const Backend& backend() const { return backend_; }
  bool has_analytic() const { return static_cast<bool>(analytic_); }

  /// Copy of this field differentiated with another backend.
  MetricField with_backend(Backend backend) const;
  MetricField with_role(MetricRole role) const;

  Mat value(const Point& p) const;

  /// Components and partials up to `order` (0, 1 or 2) using the selected
  /// backend. Analytic falls back to fd4 when no exact evaluator exists.
  MetricJet evaluate(const Point& p, int order) const;

 private:
  int dim_;
  MetricRole role_;
  Backend backend_;
  ValueFn value_;
  AnalyticFn analytic_;
};

/// The flat metric delta in Cartesian coordinates (exact zero derivatives).
MetricField euclidean_metric(int dim);

/// The hyperbolic metric b = delta - y y^T / (1 + |y|^2) in the Minkowski
/// spatial chart y = sinh(rho) theta.
MetricField hyperbolic_metric(int dim);

/// x -> Q^T g(Q x) Q for a constant orthogonal Q; derivatives transform exactly.
MetricField rotated(const MetricField& metric, const Mat& rotation);

}  // namespace asymass
