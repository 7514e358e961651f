#include "asymass/invariants/invariants.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "asymass/boundary/boundary.hpp"
#include "asymass/geomcore/polar.hpp"
#include "asymass/geomcore/tensor_calculus.hpp"

namespace asymass {

std::string_view to_string(Functional f) {
  switch (f) {
    case Functional::mass_adm:
      return "mass_adm";
    case Functional::mass_geometric:
      return "mass_geometric";
    case Functional::mass_bulk:
      return "mass_bulk";
    case Functional::center_adm:
      return "center_adm";
    case Functional::center_geometric:
      return "center_geometric";
    case Functional::hyp_charge:
      return "hyp_charge";
    case Functional::hyp_geometric:
      return "hyp_geometric";
  }
  return "unknown";
}

Functional functional_from_string(std::string_view name) {
  for (Functional f : {Functional::mass_adm, Functional::mass_geometric, Functional::mass_bulk,
                       Functional::center_adm, Functional::center_geometric,
                       Functional::hyp_charge, Functional::hyp_geometric})
    if (to_string(f) == name) return f;
  throw ConfigError("unknown functional '" + std::string(name) + "'");
}

Model model_of(Functional f) {
  return (f == Functional::hyp_charge || f == Functional::hyp_geometric) ? Model::hyperbolic
                                                                         : Model::flat;
}

bool is_indexed(Functional f) {
  return f == Functional::center_adm || f == Functional::center_geometric ||
         f == Functional::hyp_charge || f == Functional::hyp_geometric;
}

RadiiLadder RadiiLadder::defaults(Model model) {
  if (model == Model::flat) return {4.0, 2.0, 6};
  return {3.0, 0.25, 6};
}

std::vector<double> RadiiLadder::radii(Model model) const {
  if (count < 1) throw ConfigError("radii ladder needs at least one rung");
  if (model == Model::flat && (start <= 0.0 || factor <= 1.0))
    throw ConfigError("flat radii ladder needs start > 0 and factor > 1");
  if (model == Model::hyperbolic && (start <= 0.0 || factor <= 0.0))
    throw ConfigError("hyperbolic radii ladder needs start > 0 and step > 0");
  std::vector<double> out;
  for (int k = 0; k < count; ++k)
    out.push_back(model == Model::flat ? start * std::pow(factor, k) : start + k * factor);
  return out;
}

InvariantRequest::InvariantRequest(MetricField physical_, MetricField reference_, Model model_,
                                   double decay_tau_)
    : physical(std::move(physical_)),
      reference(std::move(reference_)),
      model(model_),
      decay_tau(decay_tau_),
      ladder(RadiiLadder::defaults(model_)),
      rule(QuadratureRule::defaults(physical.dim())) {}

double expected_rate(Model model, int n, double tau) {
  if (!std::isfinite(tau)) return 0.0;
  return model == Model::flat ? 2.0 * tau - (n - 2) : 2.0 * tau - n;
}

namespace {

double chart_radius_of(const InvariantRequest& req, double r) {
  return req.model == Model::flat ? r : chart_radius(r);
}

void check_model(const InvariantRequest& req, Model expected, Functional f) {
  if (req.model != expected) {
    std::ostringstream os;
    os << to_string(f) << " requires the " << to_string(expected) << " model, got "
       << to_string(req.model);
    throw ConfigError(os.str());
  }
  if (req.physical.dim() != req.reference.dim())
    throw ConfigError("physical and reference metrics have different dimensions");
}

}  // namespace

FluxSample charge_flux(const InvariantRequest& req, const ScalarField& weight, double r) {
  const int n = req.physical.dim();
  const double radius = chart_radius_of(req, r);
  const SurfacePatch hemi = SurfacePatch::hemisphere(n, radius);
  const SurfacePatch corner = SurfacePatch::corner_sphere(n, radius);
  const Backend backend = req.reference.backend();

  // Per-node scale: the perturbation is a difference of metrics of size
  // |b|, so round-off in U is relative to |b| and |db|, not to |e|.
  const Integral bulk = integrate_patch_scaled(
      hemi, req.rule,
      [&](const Embedding& e) {
        const LocalGeometry ref = local_geometry(req.reference, e.x, 1);
        const Perturbation pert = perturbation(req.physical, req.reference, e.x);
        const double w = weight.value(e.x);
        const Vec dw = weight.gradient(e.x, backend);
        const Vec u = charge_one_form(ref, pert, w, dw);
        const Vec mu = *surface_frame(ref, hemi).mu;
        const double density = areal_density(e, ref.g);
        double dsize = 0.0;
        for (int k = 0; k < n; ++k) dsize += ref.dg[k].norm() + pert.de[k].norm();
        const double size =
            std::abs(w) * dsize + dw.norm() * (ref.g.norm() + pert.e.norm());
        return Integral{u.dot(mu) * density, std::abs(u.dot(mu)) * density +
                                                 mu.norm() * size * density};
      },
      req.parallel);
  const Integral edge = integrate_patch(
      corner, req.rule,
      [&](const Embedding& e) {
        const LocalGeometry ref = local_geometry(req.reference, e.x, 0);
        const Mat pert = req.physical.value(e.x) - ref.g;
        const SurfaceFrame f = surface_frame(ref, corner);
        return weight.value(e.x) * f.eta->dot(pert * *f.conormal) * areal_density(e, ref.g);
      },
      req.parallel);
  const double c = Constants::of(n).c;
  return {c * (bulk.value - edge.value), std::abs(c) * (bulk.magnitude + edge.magnitude)};
}

Mat modified_einstein(const LocalGeometry& g, const LocalGeometry& b) {
  const int n = g.n;
  return (einstein_tensor(g) - einstein_tensor(b)) - 0.5 * (n - 1) * (n - 2) * (g.g - b.g);
}

Mat modified_einstein(const MetricField& physical, const MetricField& reference, const Point& p) {
  return modified_einstein(local_geometry(physical, p, 2), local_geometry(reference, p, 2));
}

FluxSample geometric_flux(const InvariantRequest& req, const VectorField& field, double r) {
  const int n = req.physical.dim();
  const double radius = chart_radius_of(req, r);
  const SurfacePatch hemi = SurfacePatch::hemisphere(n, radius);
  const SurfacePatch corner = SurfacePatch::corner_sphere(n, radius);
  const bool hyperbolic = req.model == Model::hyperbolic;

  const Integral bulk = integrate_patch_scaled(
      hemi, req.rule,
      [&](const Embedding& e) {
        const LocalGeometry geo = local_geometry(req.physical, e.x, 2);
        Mat einstein = einstein_tensor(geo);
        double size = einstein.norm();
        if (hyperbolic) {
          const LocalGeometry ref = local_geometry(req.reference, e.x, 2);
          einstein = modified_einstein(geo, ref);
          size += einstein_tensor(ref).norm() +
                  0.5 * (n - 1) * (n - 2) * (geo.g.norm() + ref.g.norm());
        }
        const Vec mu = *surface_frame(geo, hemi).mu;
        const Vec x = field.value(e.x);
        const double density = areal_density(e, geo.g);
        return Integral{x.dot(einstein * mu) * density,
                        x.norm() * mu.norm() * size * density};
      },
      req.parallel);
  const Integral edge = integrate_patch(
      corner, req.rule,
      [&](const Embedding& e) {
        const LocalGeometry geo = local_geometry(req.physical, e.x, 1);
        const Mat j = newton_tensor(second_fundamental_form(geo, corner));
        const Vec theta = *surface_frame(geo, corner).conormal;
        return field.value(e.x).dot(j * theta) * areal_density(e, geo.g);
      },
      req.parallel);
  const double d = Constants::of(n).d;
  return {d * (bulk.value + edge.value), std::abs(d) * (bulk.magnitude + edge.magnitude)};
}

std::array<double, 4> cutoff(double t, double r) {
  const double a = 0.5 * r, w = 0.25 * r;
  if (t <= a) return {0.0, 0.0, 0.0, 0.0};
  if (t >= a + w) return {1.0, 0.0, 0.0, 0.0};
  const double s = (t - a) / w;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const double f0 = s4 * (35.0 - 84.0 * s + 70.0 * s2 - 20.0 * s3);
  const double f1 = s3 * (140.0 - 420.0 * s + 420.0 * s2 - 140.0 * s3);
  const double f2 = s2 * (420.0 - 1680.0 * s + 2100.0 * s2 - 840.0 * s3);
  const double f3 = s * (840.0 - 5040.0 * s + 8400.0 * s2 - 4200.0 * s3);
  return {f0, f1 / w, f2 / (w * w), f3 / (w * w * w)};
}

MetricField interpolated_metric(const MetricField& physical, const MetricField& reference,
                                double r) {
  const int n = physical.dim();
  MetricField::ValueFn value = [physical, reference, r](const Point& p) {
    const double chi = cutoff(p.norm(), r)[0];
    if (p.norm() >= 0.75 * r) return physical.value(p);
    const Mat b = reference.value(p);
    if (chi == 0.0) return b;
    return Mat(b + chi * (physical.value(p) - b));
  };
  MetricField::AnalyticFn analytic = [physical, reference, r, n](const Point& p, int order) {
    const double t = p.norm();
    const auto c = cutoff(t, r);
    if (t >= 0.75 * r) return physical.evaluate(p, order);
    const MetricJet b = reference.evaluate(p, order);
    if (c[0] == 0.0) return b;
    const MetricJet g = physical.evaluate(p, order);
    const Vec xhat = p / t;
    const Vec dchi = c[1] * xhat;
    const Mat ddchi =
        c[2] * xhat * xhat.transpose() + c[1] * (identity(n) - xhat * xhat.transpose()) / t;
    MetricJet h;
    h.order = order;
    const Mat e = g.g - b.g;
    h.g = b.g + c[0] * e;
    if (order >= 1)
      for (int k = 0; k < n; ++k) h.dg[k] = b.dg[k] + c[0] * (g.dg[k] - b.dg[k]) + dchi(k) * e;
    if (order >= 2)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          h.d2g[k][l] = b.d2g[k][l] + c[0] * (g.d2g[k][l] - b.d2g[k][l]) +
                        dchi(k) * (g.dg[l] - b.dg[l]) + dchi(l) * (g.dg[k] - b.dg[k]) +
                        ddchi(k, l) * e;
    return h;
  };
  return MetricField(n, MetricRole::physical, value, analytic).with_backend(physical.backend());
}

FluxSample bulk_flux(const InvariantRequest& req, double r) {
  const int n = req.physical.dim();
  const MetricField h = interpolated_metric(req.physical, req.reference, r);
  // Inside r/2 the interpolated metric is the flat reference and both
  // integrands vanish, so only [r/2, r] is integrated. The cutoff is
  // piecewise polynomial with a break at 3r/4; the radial order is shared
  // between the two panels.
  const std::vector<double> breaks{0.75 * r};
  const SurfacePatch shell = SurfacePatch::half_annulus(n, 0.5 * r, r, breaks);
  const SurfacePatch annulus = SurfacePatch::boundary_annulus(n, 0.5 * r, r, breaks);
  QuadratureRule rule = req.rule;
  rule.radial = std::max(4, (rule.radial + 1) / 2);

  const Integral volume = integrate_patch(
      shell, rule,
      [&](const Embedding& e) {
        return curvature(h, e.x).scalar * areal_density(e, req.reference.value(e.x));
      },
      req.parallel);
  const Integral boundary = integrate_patch(
      annulus, rule,
      [&](const Embedding& e) {
        const LocalGeometry geo = local_geometry(h, e.x, 1);
        return second_fundamental_form(geo, annulus).mean *
               areal_density(e, req.reference.value(e.x));
      },
      req.parallel);
  const double c = Constants::of(n).c;
  return {c * (volume.value + 2.0 * boundary.value),
          std::abs(c) * (volume.magnitude + 2.0 * boundary.magnitude)};
}

namespace {

std::string rule_string(const QuadratureRule& q) {
  std::ostringstream os;
  os << q.polar << "," << q.azimuth << "," << q.radial;
  return os.str();
}

std::map<std::string, std::string> conventions(const InvariantRequest& req) {
  std::ostringstream ladder;
  ladder << req.ladder.start << "," << req.ladder.factor << "," << req.ladder.count;
  std::map<std::string, std::string> c{
      {"second_fundamental_form", std::string(describe(kSecondFormConvention))},
      {"second_fundamental_form_sign", std::string(to_string(kSecondFormConvention))},
      {"curvature", "R^i_jkl = d_k Gamma^i_lj - d_l Gamma^i_kj + ...; Ric_jl = R^k_jkl; "
                    "scalar(b) = -n(n-1)"},
      {"normals", "unit normals normalized in the metric of the integral's measure"},
      {"backend", std::string(to_string(req.physical.backend().kind))},
      {"quadrature", rule_string(req.rule)},
      {"ladder", ladder.str()},
      {"model", std::string(to_string(req.model))},
      {"extrapolation", req.model == Model::flat ? "wynn-epsilon, power law in r"
                                                 : "wynn-epsilon, exponential in rho"},
  };
  if (req.model == Model::hyperbolic) {
    c["chart"] = "y = sinh(rho) theta (spatial Minkowski coordinates)";
    c["static_equation"] = "hess_b W = W b";
    c["conformal_fields"] = "X_a = grad_b W_a";
  }
  return c;
}

template <class Flux>
MassReport run_ladder(const InvariantRequest& req, Functional f, int index, double scale,
                      Flux flux) {
  MassReport report;
  report.functional = std::string(to_string(f));
  report.component = is_indexed(f) ? index : -1;
  report.scale = scale;
  report.conventions = conventions(req);
  double magnitude = 0.0;
  for (double r : req.ladder.radii(req.model)) {
    const FluxSample s = flux(r);
    report.samples.push_back({r, scale * s.value});
    magnitude = std::max(magnitude, std::abs(scale) * s.magnitude);
  }
  const DecayModel dm =
      req.model == Model::flat ? DecayModel::power_law : DecayModel::exponential;
  // Magnitudes carry the per-node cancellation scale, so the floor is a small
  // multiple of the unit round-off; finite differences of second derivatives
  // lose about eps / h^2 of it.
  const bool exact = req.physical.backend().kind == BackendKind::analytic;
  const double relative = exact ? 64.0 * std::numeric_limits<double>::epsilon() : 1e-7;
  report.fit = extrapolate(report.samples, dm, relative * magnitude);
  return report;
}

double resolve_mass(const InvariantRequest& req) {
  const double m = req.mass ? *req.mass : mass_adm(req).limit();
  if (!(std::abs(m) >= 1e-8)) {
    std::ostringstream os;
    os << "center of mass is undefined: mass " << m << " is below 1e-8 in magnitude";
    throw DegenerateMassError(os.str());
  }
  return m;
}

void check_alpha(int n, int alpha) {
  if (alpha < 1 || alpha > n - 1) {
    std::ostringstream os;
    os << "center component alpha = " << alpha << " must lie in [1, " << n - 1 << "]";
    throw ConfigError(os.str());
  }
}

void check_a(int n, int a) {
  if (a < 0 || a > n - 1) {
    std::ostringstream os;
    os << "static potential index a = " << a << " must lie in [0, " << n - 1 << "]";
    throw ConfigError(os.str());
  }
}

}  // namespace

MassReport mass_adm(const InvariantRequest& req) {
  check_model(req, Model::flat, Functional::mass_adm);
  const ScalarField one = static_potentials(Model::flat, req.physical.dim())[0];
  MassReport rep = run_ladder(req, Functional::mass_adm, 0, 1.0,
                              [&](double r) { return charge_flux(req, one, r); });
  rep.expected_rate = expected_rate(req.model, req.physical.dim(), req.decay_tau);
  check_rate(rep);
  return rep;
}

MassReport mass_geometric(const InvariantRequest& req) {
  check_model(req, Model::flat, Functional::mass_geometric);
  const VectorField x0 = conformal_field(Model::flat, req.physical.dim(), 0);
  MassReport rep = run_ladder(req, Functional::mass_geometric, 0, 1.0,
                              [&](double r) { return geometric_flux(req, x0, r); });
  rep.expected_rate = expected_rate(req.model, req.physical.dim(), req.decay_tau);
  check_rate(rep);
  return rep;
}

MassReport mass_bulk(const InvariantRequest& req) {
  check_model(req, Model::flat, Functional::mass_bulk);
  MassReport rep = run_ladder(req, Functional::mass_bulk, 0, 1.0,
                              [&](double r) { return bulk_flux(req, r); });
  rep.expected_rate = expected_rate(req.model, req.physical.dim(), req.decay_tau);
  check_rate(rep);
  return rep;
}

MassReport center_adm(const InvariantRequest& req, int alpha) {
  check_model(req, Model::flat, Functional::center_adm);
  check_alpha(req.physical.dim(), alpha);
  const double m = resolve_mass(req);
  const ScalarField xa = static_potentials(Model::flat, req.physical.dim())[alpha];
  MassReport rep = run_ladder(req, Functional::center_adm, alpha, 1.0 / m,
                              [&](double r) { return charge_flux(req, xa, r); });
  rep.conventions["mass"] = std::to_string(m);
  return rep;
}

MassReport center_geometric(const InvariantRequest& req, int alpha) {
  check_model(req, Model::flat, Functional::center_geometric);
  check_alpha(req.physical.dim(), alpha);
  const double m = resolve_mass(req);
  const VectorField xa = conformal_field(Model::flat, req.physical.dim(), alpha);
  MassReport rep = run_ladder(req, Functional::center_geometric, alpha, -0.5 / m,
                              [&](double r) { return geometric_flux(req, xa, r); });
  rep.conventions["mass"] = std::to_string(m);
  return rep;
}

MassReport hyp_mass_charge(const InvariantRequest& req, int a) {
  check_model(req, Model::hyperbolic, Functional::hyp_charge);
  check_a(req.physical.dim(), a);
  const ScalarField w = static_potentials(Model::hyperbolic, req.physical.dim())[a];
  MassReport rep = run_ladder(req, Functional::hyp_charge, a, 1.0,
                              [&](double r) { return charge_flux(req, w, r); });
  if (a == 0) {
    rep.expected_rate = expected_rate(req.model, req.physical.dim(), req.decay_tau);
    check_rate(rep);
  }
  return rep;
}

MassReport hyp_mass_geometric(const InvariantRequest& req, int a) {
  check_model(req, Model::hyperbolic, Functional::hyp_geometric);
  check_a(req.physical.dim(), a);
  const VectorField x = conformal_field(Model::hyperbolic, req.physical.dim(), a);
  MassReport rep = run_ladder(req, Functional::hyp_geometric, a, 1.0,
                              [&](double r) { return geometric_flux(req, x, r); });
  if (a == 0) {
    rep.expected_rate = expected_rate(req.model, req.physical.dim(), req.decay_tau);
    check_rate(rep);
  }
  return rep;
}

MassReport evaluate(const InvariantRequest& req, Functional f, int index) {
  switch (f) {
    case Functional::mass_adm:
      return mass_adm(req);
    case Functional::mass_geometric:
      return mass_geometric(req);
    case Functional::mass_bulk:
      return mass_bulk(req);
    case Functional::center_adm:
      return center_adm(req, index);
    case Functional::center_geometric:
      return center_geometric(req, index);
    case Functional::hyp_charge:
      return hyp_mass_charge(req, index);
    case Functional::hyp_geometric:
      return hyp_mass_geometric(req, index);
  }
  throw ConfigError("unknown functional");
}

}  // namespace asymass
