#pragma once

#include <string_view>
#include <vector>

#include "asymass/geomcore/fields.hpp"
#include "asymass/geomcore/metric_field.hpp"
#include "asymass/geomcore/tensor_calculus.hpp"

namespace asymass {

enum class Model { flat, hyperbolic };

std::string_view to_string(Model m);
Model model_from_string(std::string_view name);

/// Universal constants of the flux formulas in dimension n.
struct Constants {
  int n = 3;
  double omega = 0.0;  // volume of the unit (n-1)-sphere
  double c = 0.0;      // 1 / (2 (n-1) omega)
  double d = 0.0;      // 1 / ((2-n) (n-1) omega)

  static Constants of(int n);
};

/// Decay threshold an admissible metric must beat: (n-2)/2 for the flat
/// model, n/2 for the hyperbolic one.
double decay_threshold(Model model, int n);

/// Physical metric g, reference metric (delta or b), weight w. The
/// perturbation is e = g - reference.
struct ChargeContext {
  MetricField physical;
  MetricField reference;
  ScalarField weight;
  double decay_tau = 0.0;  // declared decay exponent
};

/// Perturbation e = g - reference and its first partials at p.
struct Perturbation {
  Mat e;
  MatGrad de;
};
Perturbation perturbation(const MetricField& physical, const MetricField& reference,
                          const Point& p);

/// The charge 1-form
///   U = w (div e - d tr e) - e(grad w, .) + tr e dw,
/// all operations taken with the reference metric.
Vec charge_one_form(const ChargeContext& ctx, const Point& p);
Vec charge_one_form(const LocalGeometry& reference, const Perturbation& e, double w,
                    const Vec& dw);

/// Static potentials of the model: {1, x_1, ..., x_{n-1}} for the flat
/// half-space and {cosh rho, sinh rho theta_alpha} = {sqrt(1+|y|^2), y_alpha}
/// for the hyperbolic one (Minkowski chart). All carry exact derivatives.
std::vector<ScalarField> static_potentials(Model model, int n);

/// Conformal fields tangent to the model boundary:
///  flat:       X_0 = x, X_alpha = r^2 e_alpha - 2 x_alpha x;
///  hyperbolic: X_a = grad_b W_a, i.e. X_0 = sqrt(1+|y|^2) y, X_alpha = e_alpha + y_alpha y.
VectorField conformal_field(Model model, int n, int index);

/// Reflection (x', x_n) -> (-x', x_n).
Point reflect(const Point& p);

/// (f(p) - f(reflect(p))) / 2. Throws DomainError if p or its reflection
/// lies outside the exterior region {x_n >= 0, |x| >= inner_radius}.
double odd_part(const ScalarField& f, const Point& p, double inner_radius = 0.0);

}  // namespace asymass
