#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "asymass/asymfields/asymfields.hpp"
#include "asymass/boundary/boundary.hpp"
#include "asymass/geomcore/fields.hpp"
#include "asymass/geomcore/metric_field.hpp"
#include "asymass/quad/extrapolate.hpp"

namespace asymass {

/// A pointwise residual with the size of the largest individual term that
/// entered it, so that a small residual can be judged against cancellation.
struct PointResidual {
  double value = 0.0;
  double scale = 0.0;
};

/// Residuals of one identity over a set of points. pass <=> max <= tolerance.
struct ResidualReport {
  std::string name;
  std::vector<Point> points;
  std::vector<double> residuals;
  std::vector<double> scales;
  double max = 0.0;
  double rms = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::uint64_t seed = 0;
};

/// Fills max, rms and pass from the residuals.
void finalize(ResidualReport& report);

/// |div(Y _| K) - <div K, Y> - <K, (1/2) L_Y g - (div Y / n) g> - (1/n) div Y tr K|
/// at p. Every derivative uses the metric's backend; with a finite-difference
/// backend the one-form Y _| K is differentiated as a whole, independently of
/// the product rule used on the right-hand side.
PointResidual pohozaev_terms(const MetricField& metric, const Sym2Field& k, const VectorField& y,
                             const Point& p);
double pohozaev_residual(const MetricField& metric, const Sym2Field& k, const VectorField& y,
                         const Point& p);

/// |div_Sigma J - Ric(eta, .)| on Sigma-tangent directions at a point of
/// Sigma = {x_n = 0}, measured in the induced metric. eta is always the
/// outward normal; `convention` only selects the sign of Pi inside J, so the
/// wrong choice leaves a residual of size 2 |Ric(eta, .)|.
PointResidual codazzi_terms(const MetricField& metric, const Point& p,
                            SecondFormConvention convention = kSecondFormConvention);
double codazzi_residual(const MetricField& metric, const Point& p,
                        SecondFormConvention convention = kSecondFormConvention);

/// |E(X, eta) - Ric(X, eta)| for X tangent to Sigma at p.
double tangent_flux_residual(const MetricField& metric, const Vec& x, const Point& p);

/// tensor: g-norm of nabla^2 w - (tr nabla^2 w) g - w Ric;
/// boundary: |dw(eta)| with eta the unit normal of Sigma, only when p_n = 0.
struct StaticResidual {
  double tensor = 0.0;
  std::optional<double> boundary;
  double scale = 0.0;
};
StaticResidual static_residual(const MetricField& metric, const ScalarField& w, const Point& p);

// ---------------------------------------------------------------------------
// Seeded random test fields: polynomials of degree <= 3 with coefficients in
// [-1, 1], and smooth non-polynomial metrics close to delta.

using Rng = std::mt19937_64;

ScalarField random_polynomial(int n, int degree, Rng& rng);
VectorField random_vector_field(int n, int degree, Rng& rng);
Sym2Field random_sym2_field(int n, int degree, Rng& rng);
/// delta + amplitude * S(x) with S symmetric, entries sin(a . x + b).
MetricField random_metric(int n, double amplitude, Rng& rng);
/// Uniform point in [-half_width, half_width]^n.
Point random_point(int n, double half_width, Rng& rng);
/// Uniform points of Sigma with r1 <= |x| <= r2.
std::vector<Point> boundary_points(int n, int count, double r1, double r2, std::uint64_t seed);

/// `count` seeded instances (random metric, K, Y, point) evaluated with the
/// given backend.
ResidualReport pohozaev_check(int n, int count, std::uint64_t seed, const Backend& backend,
                              double tolerance);

/// Empirical order of the Pohozaev residual in the finite-difference step.
struct OrderEstimate {
  std::vector<double> steps;
  std::vector<double> residuals;  // max over instances at each step
  std::vector<double> orders;     // log2 of successive ratios
  double order = 0.0;             // mean of `orders`
};
OrderEstimate pohozaev_order(int n, int count, std::uint64_t seed, BackendKind kind,
                             const std::vector<double>& steps);

ResidualReport codazzi_check(const MetricField& metric, const std::vector<Point>& points,
                             double tolerance,
                             SecondFormConvention convention = kSecondFormConvention);

/// Tensor residuals of the model's static potentials at the given points.
ResidualReport static_check(Model model, int n, const std::vector<Point>& points,
                            double tolerance);

// ---------------------------------------------------------------------------
// Decay.

/// Least-squares fit of log|v| against log r (power law) or r (exponential):
/// |v| ~ C r^{-rate} or C e^{-rate r}. Values at or below `floor` are
/// dropped; with fewer than two left the quantity counts as vanishing and
/// the rate is +inf.
struct DecayFit {
  std::string quantity;
  std::vector<double> radii;
  std::vector<double> values;
  double rate = 0.0;
  /// rate minus the derivative offset of the quantity: the fitted tau.
  double tau = 0.0;
  bool vanishing = false;
  bool gating = false;  // takes part in the admission decision
  bool pass = true;     // tau > threshold
};
DecayFit fit_decay(const std::vector<double>& radii, const std::vector<double>& values,
                   DecayModel model, double floor = 1e-12);

struct DecayOptions {
  /// Chart radii (flat) or geodesic radii (hyperbolic); empty selects
  /// 8 * 2^k, k < 6, or 3 + k / 2, k < 6, moved out past 4 * inner_radius.
  std::vector<double> radii;
  int rays = 12;
  double inner_radius = 0.0;
  std::uint64_t seed = 0;
  double floor = 1e-12;
};

/// Fitted rates of |e|, |de|, |d^2 e| (norms in the reference metric, i.e.
/// the b-orthonormal frame in the hyperbolic case), of the scalar curvature
/// deviation and of the boundary mean curvature, plus odd-part diagnostics
/// under (x', x_n) -> (-x', x_n) for the flat model. Only the metric fits
/// gate admission; curvature and odd-part rates are reported.
struct DecayReport {
  Model model = Model::flat;
  int n = 3;
  double threshold = 0.0;
  std::optional<double> declared_tau;
  std::vector<DecayFit> fits;
  std::vector<DecayFit> odd;  // flat model only
  double fitted_tau = 0.0;    // min tau over gating fits
  bool odd_condition = true;  // |e_odd| ~ r^{-tau-1}, |R_odd| ~ r^{-2 tau-2}
  bool admit = true;
  std::string reason;
};

DecayReport decay_report(const MetricField& physical, Model model,
                         std::optional<double> declared_tau = std::nullopt,
                         const DecayOptions& options = {});

}  // namespace asymass
