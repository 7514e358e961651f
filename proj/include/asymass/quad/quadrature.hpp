#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "asymass/geomcore/metric_field.hpp"
#include "asymass/quad/patch.hpp"

namespace asymass {

/// Gauss-Legendre nodes and weights on [a, b].
struct Rule1d {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Rule1d gauss_legendre(int order, double a, double b);
/// Periodic trapezoid on [0, 2 pi) with `count` equispaced nodes.
Rule1d periodic_trapezoid(int count);

/// Orders of the product rules. Polar angles use Gauss-Legendre with `polar`
/// nodes each, the azimuth a periodic trapezoid with `azimuth` nodes, the
/// radial direction of annuli Gauss-Legendre with `radial` nodes per
/// sub-interval.
struct QuadratureRule {
  int polar = 48;
  int azimuth = 96;
  int radial = 32;

  /// Defaults scaled with the dimension: the n = 3 orders above, and
  /// reduced orders in higher dimension where the node count multiplies.
  static QuadratureRule defaults(int n);
  QuadratureRule doubled() const { return {2 * polar, 2 * azimuth, 2 * radial}; }
};

/// Tensor-product rule in parameter space for a patch.
class ProductRule {
 public:
  ProductRule(const SurfacePatch& patch, const QuadratureRule& rule);
  std::size_t size() const { return size_; }
  int param_count() const { return static_cast<int>(axes_.size()); }
  /// Parameters and weight of node i.
  double node(std::size_t i, double* params) const;

 private:
  std::vector<Rule1d> axes_;
  std::size_t size_ = 1;
};

/// Result of a quadrature: the sum and the sum of absolute contributions
/// (the scale against which cancellation noise is measured).
struct Integral {
  double value = 0.0;
  double magnitude = 0.0;
};

/// Parallel options. Nodes are split into fixed blocks; each block is summed
/// sequentially and block sums are added in block order, so results are
/// bit-identical for every worker count.
struct Parallelism {
  int workers = 0;  // 0 = hardware concurrency
  std::size_t block = 2048;
};

/// Sum over nodes of weight * fn(embedding); fn must be thread-safe.
/// Throws EvaluationError carrying the node if fn returns a non-finite value.
Integral integrate_patch(const SurfacePatch& patch, const QuadratureRule& rule,
                         const std::function<double(const Embedding&)>& fn,
                         const Parallelism& par = {});

/// As above, but fn also reports the size of the largest term that cancelled
/// inside its value; `magnitude` then accumulates |weight| * that scale.
Integral integrate_patch_scaled(const SurfacePatch& patch, const QuadratureRule& rule,
                                const std::function<Integral(const Embedding&)>& fn,
                                const Parallelism& par = {});

/// sqrt(det(T^T G T)) for the tangents T of the embedding and a metric
/// matrix G at the embedded point.
double areal_density(const Embedding& e, const Mat& g);

/// Integral of a point integrand against the area/volume element of
/// `measure` (the reference or the physical metric).
Integral integrate_surface(const std::function<double(const Point&)>& f,
                           const SurfacePatch& patch, const QuadratureRule& rule,
                           const MetricField& measure, const Parallelism& par = {});

/// Same as integrate_surface; named for volume domains (half-annuli) and
/// boundary annuli.
Integral integrate_bulk(const std::function<double(const Point&)>& f,
                        const SurfacePatch& patch, const QuadratureRule& rule,
                        const MetricField& measure, const Parallelism& par = {});

}  // namespace asymass
