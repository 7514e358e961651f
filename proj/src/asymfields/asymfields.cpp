#include "asymass/asymfields/asymfields.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace asymass {

std::string_view to_string(Model m) { return m == Model::flat ? "flat" : "hyperbolic"; }

Model model_from_string(std::string_view name) {
  if (name == "flat") return Model::flat;
  if (name == "hyperbolic") return Model::hyperbolic;
  throw ConfigError("unknown model '" + std::string(name) + "' (expected flat|hyperbolic)");
}

Constants Constants::of(int n) {
  Constants k;
  k.n = n;
  k.omega = 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
  k.c = 1.0 / (2.0 * (n - 1) * k.omega);
  k.d = 1.0 / ((2.0 - n) * (n - 1) * k.omega);
  return k;
}

double decay_threshold(Model model, int n) {
  return model == Model::flat ? 0.5 * (n - 2) : 0.5 * n;
}

Perturbation perturbation(const MetricField& physical, const MetricField& reference,
                          const Point& p) {
  const MetricJet g = physical.evaluate(p, 1);
  const MetricJet b = reference.evaluate(p, 1);
  Perturbation out;
  out.e = g.g - b.g;
  for (int k = 0; k < physical.dim(); ++k) out.de[k] = g.dg[k] - b.dg[k];
  return out;
}

Vec charge_one_form(const LocalGeometry& ref, const Perturbation& pert, double w,
                    const Vec& dw) {
  const int n = ref.n;
  const MatGrad nabla = covariant_derivative(ref, pert.e, pert.de);
  Vec div_e = zero_vec(n);
  Vec dtr_e(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) div_e(j) += ref.ginv(i, c) * nabla[c](i, j);
    dtr_e(j) = (ref.ginv.array() * nabla[j].array()).sum();
  }
  const double tr_e = (ref.ginv.array() * pert.e.array()).sum();
  const Vec grad_w = ref.ginv * dw;
  return w * (div_e - dtr_e) - pert.e * grad_w + tr_e * dw;
}

Vec charge_one_form(const ChargeContext& ctx, const Point& p) {
  const LocalGeometry ref = local_geometry(ctx.reference, p, 1);
  return charge_one_form(ref, perturbation(ctx.physical, ctx.reference, p),
                         ctx.weight.value(p), ctx.weight.gradient(p));
}

std::vector<ScalarField> static_potentials(Model model, int n) {
  std::vector<ScalarField> out;
  if (model == Model::flat) {
    out.push_back(ScalarField::from_jets(n, [n](const std::vector<Jet>&) { return Jet(n, 1.0); }));
  } else {
    out.push_back(ScalarField::from_jets(
        n, [](const std::vector<Jet>& y) { return sqrt(1.0 + norm_squared(y)); }));
  }
  // The remaining generators are the tangential coordinates in both charts.
  for (int a = 0; a + 1 < n; ++a)
    out.push_back(ScalarField::from_jets(n, [a](const std::vector<Jet>& x) { return x[a]; }));
  return out;
}

VectorField conformal_field(Model model, int n, int index) {
  if (index < 0 || index >= n)
    throw DomainError("conformal field index must lie in [0, n-1]");
  if (model == Model::flat) {
    if (index == 0) return VectorField::from_jets(n, [](const std::vector<Jet>& x) { return x; });
    const int alpha = index - 1;
    return VectorField::from_jets(n, [alpha](const std::vector<Jet>& x) {
      const Jet r2 = norm_squared(x);
      std::vector<Jet> v(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) v[i] = -2.0 * x[alpha] * x[i];
      v[alpha] += r2;
      return v;
    });
  }
  if (index == 0)
    return VectorField::from_jets(n, [](const std::vector<Jet>& y) {
      const Jet w = sqrt(1.0 + norm_squared(y));
      std::vector<Jet> v(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) v[i] = w * y[i];
      return v;
    });
  const int alpha = index - 1;
  return VectorField::from_jets(n, [alpha](const std::vector<Jet>& y) {
    std::vector<Jet> v(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) v[i] = y[alpha] * y[i];
    v[alpha] += 1.0;
    return v;
  });
}

Point reflect(const Point& p) {
  Point q = -p;
  q(p.size() - 1) = p(p.size() - 1);
  return q;
}

double odd_part(const ScalarField& f, const Point& p, double inner_radius) {
  const int n = static_cast<int>(p.size());
  if (p(n - 1) < 0.0 || p.norm() < inner_radius) {
    std::ostringstream os;
    os << "odd part requested outside the exterior region (x_n = " << p(n - 1)
       << ", |x| = " << p.norm() << ", inner radius " << inner_radius << ")";
    throw DomainError(os.str());
  }
  return 0.5 * (f.value(p) - f.value(reflect(p)));
}

}  // namespace asymass
