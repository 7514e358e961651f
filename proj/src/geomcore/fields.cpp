#include "asymass/geomcore/fields.hpp"

#include <memory>

namespace asymass {

namespace {

BackendKind fd_kind(const Backend& b) {
  return b.kind == BackendKind::analytic ? BackendKind::fd4 : b.kind;
}

}  // namespace

ScalarField ScalarField::from_jets(int dim, JetFn fn) {
  auto shared = std::make_shared<JetFn>(std::move(fn));
  ScalarField f(dim, [shared](const Point& p) { return (*shared)(seed_jets(p)).value(); });
  f.jet_ = [shared](const std::vector<Jet>& x) { return (*shared)(x); };
  return f;
}

Vec ScalarField::gradient(const Point& p, const Backend& backend) const {
  if (jet_ && backend.kind == BackendKind::analytic) return jet_(seed_jets(p)).gradient();
  Vec g(dim_);
  for (int k = 0; k < dim_; ++k)
    g(k) = fd::first_scalar(value_, p, k, fd_kind(backend), backend.first_step);
  return g;
}

Mat ScalarField::hessian(const Point& p, const Backend& backend) const {
  if (jet_ && backend.kind == BackendKind::analytic) return jet_(seed_jets(p)).hessian();
  Mat h(dim_, dim_);
  for (int k = 0; k < dim_; ++k)
    for (int l = k; l < dim_; ++l)
      h(k, l) = h(l, k) =
          fd::second_scalar(value_, p, k, l, fd_kind(backend), backend.second_step);
  return h;
}

VectorField VectorField::from_jets(int dim, JetFn fn) {
  auto shared = std::make_shared<JetFn>(std::move(fn));
  VectorField f(dim, [shared, dim](const Point& p) {
    const auto comps = (*shared)(seed_jets(p));
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = comps[i].value();
    return v;
  });
  f.jet_ = [shared](const std::vector<Jet>& x) { return (*shared)(x); };
  return f;
}

Mat VectorField::jacobian(const Point& p, const Backend& backend) const {
  Mat j(dim_, dim_);
  if (jet_ && backend.kind == BackendKind::analytic) {
    const auto comps = jet_(seed_jets(p));
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) j(i, k) = comps[i].d(k);
    return j;
  }
  for (int k = 0; k < dim_; ++k)
    j.col(k) = fd::first(value_, p, k, fd_kind(backend), backend.first_step);
  return j;
}

Sym2Field Sym2Field::from_jets(int dim, JetFn fn) {
  auto shared = std::make_shared<JetFn>(std::move(fn));
  Sym2Field f(dim, [shared](const Point& p) { return unpack((*shared)(seed_jets(p)), 0).g; });
  f.jet_ = [shared](const std::vector<Jet>& x) { return (*shared)(x); };
  return f;
}

Sym2Field Sym2Field::from_metric(const MetricField& metric) {
  Sym2Field f(metric.dim(), [metric](const Point& p) { return metric.value(p); });
  if (metric.has_analytic())
    f.exact_derivative_ = [metric](const Point& p) {
      return metric.with_backend(Backend::analytic()).evaluate(p, 1).dg;
    };
  return f;
}

MatGrad Sym2Field::derivative(const Point& p, const Backend& backend) const {
  if (backend.kind == BackendKind::analytic) {
    if (jet_) return unpack(jet_(seed_jets(p)), 1).dg;
    if (exact_derivative_) return exact_derivative_(p);
  }
  MatGrad out;
  for (int k = 0; k < dim_; ++k)
    out[k] = fd::first(value_, p, k, fd_kind(backend), backend.first_step);
  return out;
}

}  // namespace asymass
