#include "asymass/geomcore/metric_field.hpp"

#include <utility>

namespace asymass {

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::analytic:
      return "analytic";
    case BackendKind::fd2:
      return "fd2";
    case BackendKind::fd4:
      return "fd4";
  }
  return "unknown";
}

BackendKind backend_from_string(std::string_view name) {
  if (name == "analytic") return BackendKind::analytic;
  if (name == "fd2") return BackendKind::fd2;
  if (name == "fd4") return BackendKind::fd4;
  throw ConfigError("unknown backend '" + std::string(name) + "' (expected analytic|fd2|fd4)");
}

std::string_view to_string(MetricRole role) {
  switch (role) {
    case MetricRole::physical:
      return "physical";
    case MetricRole::reference_flat:
      return "reference-flat";
    case MetricRole::reference_hyperbolic:
      return "reference-hyperbolic";
  }
  return "unknown";
}

MetricJet unpack(const JetSym& comps, int order) {
  const int n = comps.dim();
  MetricJet out;
  out.order = order;
  out.g = Mat(n, n);
  if (order >= 1)
    for (int k = 0; k < n; ++k) out.dg[k] = Mat(n, n);
  if (order >= 2)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) out.d2g[k][l] = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Jet& c = comps(i, j);
      out.g(i, j) = out.g(j, i) = c.value();
      if (order >= 1)
        for (int k = 0; k < n; ++k) out.dg[k](i, j) = out.dg[k](j, i) = c.d(k);
      if (order >= 2)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) out.d2g[k][l](i, j) = out.d2g[k][l](j, i) = c.dd(k, l);
    }
  return out;
}

MetricField::MetricField(int dim, MetricRole role, ValueFn value, AnalyticFn analytic)
    : dim_(dim), role_(role), value_(std::move(value)), analytic_(std::move(analytic)) {
  if (dim_ < 2 || dim_ > kMaxDim)
    throw ConfigError("metric dimension must lie in [2, " + std::to_string(kMaxDim) + "]");
}

MetricField MetricField::from_jets(int dim, MetricRole role, JetFn components) {
  auto shared = std::make_shared<JetFn>(std::move(components));
  ValueFn value = [shared](const Point& p) { return unpack((*shared)(seed_jets(p)), 0).g; };
  AnalyticFn analytic = [shared](const Point& p, int order) {
    return unpack((*shared)(seed_jets(p)), order);
  };
  return MetricField(dim, role, std::move(value), std::move(analytic));
}

MetricField MetricField::with_backend(Backend backend) const {
  MetricField copy = *this;
  copy.backend_ = backend;
  return copy;
}

MetricField MetricField::with_role(MetricRole role) const {
  MetricField copy = *this;
  copy.role_ = role;
  return copy;
}

Mat MetricField::value(const Point& p) const { return value_(p); }

MetricJet MetricField::evaluate(const Point& p, int order) const {
  if (backend_.kind == BackendKind::analytic && analytic_) return analytic_(p, order);
  const BackendKind kind =
      backend_.kind == BackendKind::analytic ? BackendKind::fd4 : backend_.kind;
  MetricJet out;
  out.order = order;
  out.g = value_(p);
  if (order >= 1)
    for (int k = 0; k < dim_; ++k)
      out.dg[k] = fd::first(value_, p, k, kind, backend_.first_step);
  if (order >= 2)
    for (int k = 0; k < dim_; ++k)
      for (int l = k; l < dim_; ++l) {
        out.d2g[k][l] = fd::second(value_, p, k, l, kind, backend_.second_step);
        out.d2g[l][k] = out.d2g[k][l];
      }
  return out;
}

MetricField euclidean_metric(int dim) {
  MetricField::ValueFn value = [dim](const Point&) { return identity(dim); };
  MetricField::AnalyticFn analytic = [dim](const Point&, int order) {
    MetricJet j;
    j.order = order;
    j.g = identity(dim);
    for (int k = 0; k < dim; ++k) {
      j.dg[k] = zero_mat(dim);
      for (int l = 0; l < dim; ++l) j.d2g[k][l] = zero_mat(dim);
    }
    return j;
  };
  return MetricField(dim, MetricRole::reference_flat, value, analytic);
}

MetricField hyperbolic_metric(int dim) {
  return MetricField::from_jets(dim, MetricRole::reference_hyperbolic,
                                [dim](const std::vector<Jet>& y) {
                                  JetSym b(dim);
                                  const Jet inv = 1.0 / (1.0 + norm_squared(y));
                                  for (int i = 0; i < dim; ++i)
                                    for (int j = i; j < dim; ++j)
                                      b(i, j) = (i == j ? 1.0 : 0.0) - y[i] * y[j] * inv;
                                  return b;
                                });
}

MetricField rotated(const MetricField& metric, const Mat& rotation) {
  const int n = metric.dim();
  const Mat q = rotation;
  MetricField::ValueFn value = [metric, q](const Point& p) {
    const Point qp = q * p;
    return Mat(q.transpose() * metric.value(qp) * q);
  };
  MetricField::AnalyticFn analytic = [metric, q, n](const Point& p, int order) {
    const MetricJet src = metric.evaluate(Point(q * p), order);
    MetricJet out;
    out.order = order;
    out.g = q.transpose() * src.g * q;
    // d/dx^k [g(Qx)] = Q_ak (d_a g)(Qx)
    if (order >= 1)
      for (int k = 0; k < n; ++k) {
        Mat acc = zero_mat(n);
        for (int a = 0; a < n; ++a) acc += q(a, k) * src.dg[a];
        out.dg[k] = q.transpose() * acc * q;
      }
    if (order >= 2)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Mat acc = zero_mat(n);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) acc += q(a, k) * q(b, l) * src.d2g[a][b];
          out.d2g[k][l] = q.transpose() * acc * q;
        }
    return out;
  };
  return MetricField(n, metric.role(), value, analytic).with_backend(metric.backend());
}

}  // namespace asymass
