#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "asymass/asymfields/asymfields.hpp"
#include "asymass/geomcore/metric_field.hpp"

namespace asymass {

/// A catalog request: entry name, dimension and named real parameters.
/// Translations are given componentwise as a1..a{n-1}; there is no a{n}
/// since translations must preserve the boundary. The parameter `rot`
/// rotates the chart by that angle in the (x1, x2) plane.
struct MetricSpec {
  std::string name;
  int n = 3;
  std::map<std::string, double> params;
};

/// A built catalog entry: physical and reference metrics with exact
/// derivatives, the declared decay exponent and the chart radius below which
/// the metric is not defined (or not asymptotic).
struct CatalogMetric {
  std::string name;
  int n = 3;
  Model model = Model::flat;
  MetricField physical;
  MetricField reference;
  double decay_tau = 0.0;
  double inner_radius = 0.0;
  /// Parameters after defaults were filled in.
  std::map<std::string, double> params;
};

struct CatalogInfo {
  std::string name;
  Model model;
  std::map<std::string, double> defaults;
  std::string description;
};

const std::vector<CatalogInfo>& catalog_entries();

/// Builds an entry. Unknown names or parameters and invalid values raise
/// ConfigError; a declared decay exponent at or below the model threshold
/// raises AdmissionError unless `enforce_decay` is false.
CatalogMetric catalog_build(const MetricSpec& spec, bool enforce_decay = true);

using ConformalFactor = std::function<Jet(const std::vector<Jet>&)>;

/// u^{4/(n-2)} delta for a user conformal factor written in jets.
MetricField conformal_flat_metric(int n, ConformalFactor u);

/// Schwarzschild conformal factor 1 + (m/2)|x - a|^{2-n}.
ConformalFactor schwarzschild_factor(int n, double m, const Vec& a);

/// Pullback of `base` (given in jets) by Phi(x) = x + A (1 + |x|^2)^{-power/2} M x.
/// The last row of M is (0, ..., 0, c), so Phi maps the boundary to itself.
MetricField::JetFn pullback_components(int n, MetricField::JetFn base, double amplitude,
                                       double power, const Mat& m);

/// Fixed perturbation matrix used by the perturbed entries; `profile`
/// selects one of a family of angular profiles.
Mat perturbation_matrix(int n, int profile);

/// Rotation by `angle` in the (x1, x2) plane; fixes the boundary.
Mat boundary_rotation(int n, double angle);

}  // namespace asymass
