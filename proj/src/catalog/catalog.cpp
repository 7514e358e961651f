#include "asymass/catalog/catalog.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "asymass/errors.hpp"

namespace asymass {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

JetSym scaled_identity(int n, const Jet& f) {
  JetSym g(n);
  for (int i = 0; i < n; ++i) g(i, i) = f;
  return g;
}

// AdS-Schwarzschild in the Minkowski chart: delta + (1/V - 1) y y^T / s^2
// with V = 1 + s^2 - 2 m s^{2-n}.
MetricField::JetFn ads_components(int n, double m) {
  return [n, m](const std::vector<Jet>& y) {
    const Jet s2 = norm_squared(y);
    const Jet v = 1.0 + s2 - 2.0 * m * pow(s2, 0.5 * (2 - n));
    const Jet radial = (1.0 / v - 1.0) / s2;
    JetSym g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) g(i, j) = (i == j ? 1.0 : 0.0) + radial * y[i] * y[j];
    return g;
  };
}

MetricField::JetFn conformally_scaled(int n, MetricField::JetFn base, ConformalFactor u) {
  return [n, base, u](const std::vector<Jet>& x) {
    const Jet f = pow(u(x), 4.0 / (n - 2));
    JetSym g = base(x);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) g(i, j) = f * g(i, j);
    return g;
  };
}

// Bending term k x_n (1 + |x|^2)^{-power}: nonzero normal derivative on the
// boundary, hence a boundary with nonzero second fundamental form.
ConformalFactor bent(ConformalFactor u, int n, double k, double power) {
  return [u, n, k, power](const std::vector<Jet>& x) {
    return u(x) + k * x[n - 1] * pow(1.0 + norm_squared(x), -power);
  };
}

double ads_horizon(int n, double m) {
  // Largest zero of 1 + s^2 - 2 m s^{2-n}; the function increases in s.
  auto v = [&](double s) { return 1.0 + s * s - 2.0 * m * std::pow(s, 2 - n); };
  double lo = 1e-12, hi = 1.0;
  while (v(hi) <= 0.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (v(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

struct Resolved {
  const CatalogInfo* info;
  std::map<std::string, double> params;
  Vec translation;
};

Resolved resolve(const MetricSpec& spec) {
  const CatalogInfo* info = nullptr;
  for (const auto& e : catalog_entries())
    if (e.name == spec.name) info = &e;
  if (!info) throw ConfigError("unknown metric '" + spec.name + "'");
  if (spec.n < 3 || spec.n > kMaxDim) {
    std::ostringstream os;
    os << "dimension n = " << spec.n << " outside the supported range [3, " << kMaxDim << "]";
    throw ConfigError(os.str());
  }
  const int n = spec.n;
  Resolved r{info, info->defaults, Vec::Zero(n)};
  if (info->name == "generic_perturbation" && !spec.params.count("tau"))
    r.params["tau"] = 0.5 * (n - 2) + 0.3;
  if (info->name == "hyp_perturbation" && !spec.params.count("sigma"))
    r.params["sigma"] = 0.6 * n;
  const bool translatable = r.params.count("a1") > 0;
  for (const auto& [key, value] : spec.params) {
    if (!std::isfinite(value)) throw ConfigError("parameter " + key + " must be finite");
    if (translatable && key.size() >= 2 && key[0] == 'a' && std::isdigit(key[1])) {
      const int i = std::stoi(key.substr(1));
      if (i == n)
        throw ConfigError("translation component a" + key.substr(1) +
                          " must vanish: translations must preserve the boundary");
      if (i < 1 || i > n) throw ConfigError("translation index out of range in " + key);
      r.translation(i - 1) = value;
      r.params[key] = value;
      continue;
    }
    if (!r.params.count(key))
      throw ConfigError("metric '" + spec.name + "' has no parameter '" + key + "'");
    r.params[key] = value;
  }
  for (int i = 1; i < n; ++i) {
    const std::string key = "a" + std::to_string(i);
    if (translatable && !r.params.count(key)) r.params[key] = 0.0;
  }
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid parameter: " + what);
}

}  // namespace

const std::vector<CatalogInfo>& catalog_entries() {
  static const std::vector<CatalogInfo> entries = {
      {"euclidean_half", Model::flat, {{"rot", 0.0}}, "g = delta on the half-space"},
      {"schwarzschild_half",
       Model::flat,
       {{"m", 1.0}, {"a1", 0.0}, {"rot", 0.0}},
       "g = (1 + m/(2|x-a|^{n-2}))^{4/(n-2)} delta, a tangent to the boundary"},
      {"conformal_flat",
       Model::flat,
       {{"m", 1.0}, {"k", 0.5}, {"a1", 0.0}, {"rot", 0.0}},
       "g = u^{4/(n-2)} delta, u = 1 + (m/2)|x-a|^{2-n} + k x_n (1+|x|^2)^{-n/2}"},
      {"generic_perturbation",
       Model::flat,
       {{"m", 1.0}, {"k", 0.5}, {"A", 0.05}, {"tau", 0.8}, {"profile", 0.0}, {"rot", 0.0}},
       "pullback of conformal_flat by x + A (1+|x|^2)^{-tau/2} M x; e ~ r^-tau with "
       "angular profile and e_{n alpha} != 0"},
      {"hyperbolic_half", Model::hyperbolic, {{"rot", 0.0}}, "g = b on the hyperbolic half-space"},
      {"ads_schwarzschild_half",
       Model::hyperbolic,
       {{"m", 1.0}, {"rot", 0.0}},
       "g = (1 + s^2 - 2 m s^{2-n})^{-1} ds^2 + s^2 h0"},
      {"hyp_perturbation",
       Model::hyperbolic,
       {{"m", 1.0}, {"k", 0.5}, {"A", 0.05}, {"sigma", 1.8}, {"profile", 0.0}, {"rot", 0.0}},
       "pullback of a boundary-bent AdS-Schwarzschild by y + A (1+|y|^2)^{-(sigma+1)/2} M y; "
       "frame decay e^{-sigma rho}"},
  };
  return entries;
}

MetricField conformal_flat_metric(int n, ConformalFactor u) {
  return MetricField::from_jets(n, MetricRole::physical,
                                [n, u](const std::vector<Jet>& x) {
                                  return scaled_identity(n, pow(u(x), 4.0 / (n - 2)));
                                });
}

ConformalFactor schwarzschild_factor(int n, double m, const Vec& a) {
  return [n, m, a](const std::vector<Jet>& x) {
    Jet d2(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const Jet t = x[i] - a(i);
      d2 += t * t;
    }
    return 1.0 + 0.5 * m * pow(d2, 0.5 * (2 - n));
  };
}

MetricField::JetFn pullback_components(int n, MetricField::JetFn base, double amplitude,
                                       double power, const Mat& m) {
  return [n, base, amplitude, power, m](const std::vector<Jet>& x) {
    const Jet w = 1.0 + norm_squared(x);
    const Jet q = pow(w, -0.5 * power);
    const Jet dq_factor = -power * pow(w, -0.5 * power - 1.0);  // d_i q = dq_factor x_i
    std::vector<Jet> mx(n, Jet(n, 0.0));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        if (m(k, j) != 0.0) mx[k] += m(k, j) * x[j];
    std::vector<Jet> phi(n);
    for (int k = 0; k < n; ++k) phi[k] = x[k] + amplitude * q * mx[k];
    // dphi[k][i] = d_i phi^k
    std::vector<std::vector<Jet>> dphi(n, std::vector<Jet>(n));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        Jet v = amplitude * (dq_factor * x[i] * mx[k] + q * m(k, i));
        if (i == k) v += 1.0;
        dphi[k][i] = v;
      }
    const JetSym g = base(phi);
    JetSym out(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Jet acc(n, 0.0);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) acc += dphi[k][i] * g(k, l) * dphi[l][j];
        out(i, j) = acc;
      }
    return out;
  };
}

Mat perturbation_matrix(int n, int profile) {
  Mat m = zero_mat(n);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::sin(1.3 + 0.7 * i + 1.9 * j + 2.1 * profile);
  m(n - 1, n - 1) = 0.5;
  return m;
}

Mat boundary_rotation(int n, double angle) {
  Mat q = identity(n);
  q(0, 0) = q(1, 1) = std::cos(angle);
  q(0, 1) = -std::sin(angle);
  q(1, 0) = std::sin(angle);
  return q;
}

CatalogMetric catalog_build(const MetricSpec& spec, bool enforce_decay) {
  const Resolved r = resolve(spec);
  const int n = spec.n;
  const auto& p = r.params;
  auto get = [&](const char* key) { return p.at(key); };

  CatalogMetric out{spec.name, n, r.info->model, euclidean_metric(n), euclidean_metric(n),
                    kInf, 0.0, p};
  const std::string& name = spec.name;
  const Vec& a = r.translation;

  if (name == "euclidean_half") {
    out.physical = euclidean_metric(n).with_role(MetricRole::physical);
  } else if (name == "schwarzschild_half") {
    require(get("m") > 0.0, "m must be positive");
    out.physical = conformal_flat_metric(n, schwarzschild_factor(n, get("m"), a));
    out.decay_tau = n - 2;
    out.inner_radius = a.norm() + 1.0 + get("m");
  } else if (name == "conformal_flat") {
    require(get("m") >= 0.0, "m must be nonnegative");
    require(std::abs(get("k")) < 1.0, "|k| must be below 1 so that u stays positive");
    out.physical = conformal_flat_metric(
        n, bent(schwarzschild_factor(n, get("m"), a), n, get("k"), 0.5 * n));
    out.decay_tau = n - 2;
    out.inner_radius = a.norm() + 1.0 + get("m");
  } else if (name == "generic_perturbation") {
    require(get("m") >= 0.0, "m must be nonnegative");
    require(std::abs(get("k")) < 1.0, "|k| must be below 1");
    require(std::abs(get("A")) <= 0.2, "|A| must not exceed 0.2 (the pullback must stay a diffeomorphism)");
    require(get("tau") > 0.0, "tau must be positive");
    const ConformalFactor u = bent(schwarzschild_factor(n, get("m"), Vec::Zero(n)), n, get("k"), 0.5 * n);
    MetricField::JetFn base = [n, u](const std::vector<Jet>& x) {
      return scaled_identity(n, pow(u(x), 4.0 / (n - 2)));
    };
    out.physical = MetricField::from_jets(
        n, MetricRole::physical,
        pullback_components(n, base, get("A"), get("tau"),
                            perturbation_matrix(n, static_cast<int>(get("profile")))));
    out.decay_tau = get("tau");
    out.inner_radius = 2.0 + get("m");
  } else if (name == "hyperbolic_half") {
    out.physical = hyperbolic_metric(n).with_role(MetricRole::physical);
    out.reference = hyperbolic_metric(n);
  } else if (name == "ads_schwarzschild_half") {
    require(get("m") > 0.0, "m must be positive");
    out.physical = MetricField::from_jets(n, MetricRole::physical, ads_components(n, get("m")));
    out.reference = hyperbolic_metric(n);
    out.decay_tau = n;
    out.inner_radius = 2.0 * ads_horizon(n, get("m"));
  } else if (name == "hyp_perturbation") {
    require(get("m") > 0.0, "m must be positive");
    require(std::abs(get("k")) < 1.0, "|k| must be below 1");
    require(std::abs(get("A")) <= 0.2, "|A| must not exceed 0.2");
    require(get("sigma") > 0.0, "sigma must be positive");
    const ConformalFactor u = bent([n](const std::vector<Jet>&) { return Jet(n, 1.0); }, n,
                                   get("k"), 0.5 * (n + 2));
    const MetricField::JetFn base = conformally_scaled(n, ads_components(n, get("m")), u);
    out.physical = MetricField::from_jets(
        n, MetricRole::physical,
        // The extra power makes the mixed radial-tangential frame components,
        // which carry a factor sinh(rho), decay like e^{-sigma rho}.
        pullback_components(n, base, get("A"), get("sigma") + 1.0,
                            perturbation_matrix(n, static_cast<int>(get("profile")))));
    out.reference = hyperbolic_metric(n);
    out.decay_tau = get("sigma");
    out.inner_radius = 2.0 * ads_horizon(n, get("m")) + 1.0;
  }

  // Rotations about the x_n axis keep every ball around the origin, so the
  // inner radius is unchanged.
  if (get("rot") != 0.0) out.physical = rotated(out.physical, boundary_rotation(n, get("rot")));

  const double threshold = decay_threshold(out.model, n);
  if (enforce_decay && !(out.decay_tau > threshold)) {
    std::ostringstream os;
    os << "metric '" << name << "' declares decay exponent " << out.decay_tau
       << " which does not exceed the " << to_string(out.model) << " threshold " << threshold;
    throw AdmissionError(os.str());
  }
  return out;
}

}  // namespace asymass
