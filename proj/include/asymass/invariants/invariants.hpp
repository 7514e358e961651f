#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "asymass/asymfields/asymfields.hpp"
#include "asymass/geomcore/metric_field.hpp"
#include "asymass/geomcore/tensor_calculus.hpp"
#include "asymass/quad/extrapolate.hpp"
#include "asymass/quad/quadrature.hpp"

namespace asymass {

enum class Functional {
  mass_adm,
  mass_geometric,
  mass_bulk,
  center_adm,
  center_geometric,
  hyp_charge,
  hyp_geometric,
};

std::string_view to_string(Functional f);
Functional functional_from_string(std::string_view name);
Model model_of(Functional f);
/// Whether the functional takes an index (alpha for centers, a for
/// hyperbolic functionals).
bool is_indexed(Functional f);

/// Flat: r_k = start * factor^k. Hyperbolic: rho_k = start + k * factor.
struct RadiiLadder {
  double start = 4.0;
  double factor = 2.0;
  int count = 6;

  static RadiiLadder defaults(Model model);
  std::vector<double> radii(Model model) const;
};

/// Everything a functional evaluation needs. For the hyperbolic model radii
/// are geodesic radii rho; the surfaces sit at chart radius sinh(rho).
struct InvariantRequest {
  MetricField physical;
  MetricField reference;
  Model model = Model::flat;
  double decay_tau = 0.0;
  RadiiLadder ladder;
  QuadratureRule rule;
  Parallelism parallel;
  /// Mass used to normalize center components; computed with mass_adm on
  /// the same ladder when absent.
  std::optional<double> mass;

  InvariantRequest(MetricField physical, MetricField reference, Model model, double decay_tau);
};

/// Raw flux value at one radius, before extrapolation. `magnitude` is the
/// same flux with absolute integrands (the round-off scale).
struct FluxSample {
  double value = 0.0;
  double magnitude = 0.0;
};

/// c_n [ int_{S_r,+} U_{e,w}(mu) - int_{S^{n-2}_r} w e(eta, theta) ], all in
/// the reference metric; `weight` is w.
FluxSample charge_flux(const InvariantRequest& req, const ScalarField& weight, double r);
/// d_n [ int_{S_r,+} E(X, mu) + int_{S^{n-2}_r} J(X, theta) ] in the physical
/// metric; E is replaced by the modified tensor for the hyperbolic model.
FluxSample geometric_flux(const InvariantRequest& req, const VectorField& field, double r);
/// c_n [ int_{M_{r/4,r}} R^h + 2 int_{Sigma_{r/4,r}} H^h ] with the reference
/// measure and the interpolated metric h.
FluxSample bulk_flux(const InvariantRequest& req, double r);

/// Smoothstep cutoff: 0 for t <= r/2, 1 for t >= 3r/4. Returns value and
/// first three derivatives in t.
std::array<double, 4> cutoff(double t, double r);

/// h = (1 - chi) reference + chi g with chi = cutoff(|x|, r); exact
/// derivatives when g and the reference have them.
MetricField interpolated_metric(const MetricField& physical, const MetricField& reference,
                                double r);

/// E - (n-1)(n-2)/2 g, evaluated as (E^g - E^b) - (n-1)(n-2)/2 (g - b) so that
/// the model's own round-off cancels.
Mat modified_einstein(const LocalGeometry& physical, const LocalGeometry& reference);
Mat modified_einstein(const MetricField& physical, const MetricField& reference,
                      const Point& p);

MassReport mass_adm(const InvariantRequest& req);
MassReport mass_geometric(const InvariantRequest& req);
MassReport mass_bulk(const InvariantRequest& req);
/// alpha in 1..n-1. Throws DegenerateMassError when |m| < 1e-8.
MassReport center_adm(const InvariantRequest& req, int alpha);
MassReport center_geometric(const InvariantRequest& req, int alpha);
/// a in 0..n-1.
MassReport hyp_mass_charge(const InvariantRequest& req, int a);
MassReport hyp_mass_geometric(const InvariantRequest& req, int a);

/// Dispatch by functional; `index` is alpha or a where applicable.
MassReport evaluate(const InvariantRequest& req, Functional f, int index = 0);

/// Convergence rate of the finite-radius error expected from the declared
/// decay: 2 tau - (n - 2) (flat) and 2 tau - n (hyperbolic).
double expected_rate(Model model, int n, double tau);

}  // namespace asymass
