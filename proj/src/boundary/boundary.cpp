#include "asymass/boundary/boundary.hpp"

#include <cmath>
#include <sstream>

namespace asymass {

std::string_view to_string(SecondFormConvention c) {
  return c == SecondFormConvention::outward ? "outward" : "inward";
}

std::string_view describe(SecondFormConvention c) {
  return c == SecondFormConvention::outward
             ? "Pi(U,V) = g(nabla_U eta, V) with eta the outward unit normal "
               "(equivalently g(nabla_U V, nu) with nu inward); H = tr Pi"
             : "Pi(U,V) = g(nabla_U nu, V) with nu the inward unit normal; H = tr Pi";
}

namespace {

void require_on(const SurfacePatch& s, const Point& p) {
  if (on_patch(s, p)) return;
  std::ostringstream os;
  os << "point (";
  for (int i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p(i);
  os << ") is not on the " << to_string(s.kind) << " of radius " << s.outer;
  throw DomainError(os.str());
}

// g-unit vector along the g-gradient of a function with coordinate gradient df.
Vec unit_gradient(const Mat& ginv, const Vec& df) {
  const Vec v = ginv * df;
  return v / std::sqrt(df.dot(v));
}

Vec outward_boundary_normal(const Mat& ginv, int n) {
  return unit_gradient(ginv, -unit_vec(n, n - 1));
}

// Unit conormal to S^{n-2}_r inside Sigma, in the metric induced on Sigma.
Vec boundary_conormal(const Mat& g, const Point& p) {
  const int n = static_cast<int>(p.size());
  const Mat gamma = g.topLeftCorner(n - 1, n - 1);
  const Vec dr = p.head(n - 1) / p.head(n - 1).norm();
  const Vec v = unit_gradient(inverse_metric(gamma, p), dr);
  Vec out = Vec::Zero(n);
  out.head(n - 1) = v;
  return out;
}

bool is_boundary(PatchKind k) {
  return k == PatchKind::boundary_annulus || k == PatchKind::corner_sphere;
}

}  // namespace

SurfaceFrame surface_frame(const LocalGeometry& geo, const SurfacePatch& surface) {
  const Point& p = geo.p;
  require_on(surface, p);
  if (surface.kind == PatchKind::half_annulus)
    throw DomainError("half-annulus is a domain, not a surface; it has no unit normal");
  const int n = geo.n;
  SurfaceFrame f;
  f.p = p;
  if (surface.kind == PatchKind::hemisphere || surface.kind == PatchKind::corner_sphere)
    f.mu = unit_gradient(geo.ginv, p / p.norm());
  if (is_boundary(surface.kind)) {
    f.eta = outward_boundary_normal(geo.ginv, n);
    f.nu = -*f.eta;
  }
  if (surface.kind == PatchKind::corner_sphere) f.conormal = boundary_conormal(geo.g, p);
  return f;
}

SurfaceFrame surface_frame(const MetricField& metric, const SurfacePatch& surface,
                           const Point& p) {
  require_on(surface, p);
  return surface_frame(local_geometry(metric, p, 0), surface);
}

SecondFundamentalForm second_fundamental_form(const LocalGeometry& geo,
                                              const SurfacePatch& surface,
                                              SecondFormConvention convention) {
  const Point& p = geo.p;
  require_on(surface, p);
  const int n = geo.n;
  // Defining function F with grad F along the outward normal.
  Vec df;
  Mat ddf;
  if (surface.kind == PatchKind::hemisphere) {
    const double r = p.norm();
    df = p / r;
    ddf = (identity(n) - df * df.transpose()) / r;
  } else if (is_boundary(surface.kind)) {
    df = -unit_vec(n, n - 1);
    ddf = zero_mat(n);
  } else {
    throw DomainError("second fundamental form needs a hemisphere or the boundary Sigma");
  }
  const Mat hess = covariant_hessian(geo, df, ddf);
  const double grad_norm = std::sqrt(df.dot(geo.ginv * df));

  SecondFundamentalForm out;
  out.normal = geo.ginv * df / grad_norm;
  const Vec normal_flat = geo.g * out.normal;
  const Mat proj = identity(n) - out.normal * normal_flat.transpose();  // P^i_j
  out.pi = proj.transpose() * (hess / grad_norm) * proj;
  if (convention == SecondFormConvention::inward) out.pi = -out.pi;
  out.induced = geo.g - normal_flat * normal_flat.transpose();
  out.mean = (geo.ginv.array() * out.pi.array()).sum();
  return out;
}

SecondFundamentalForm second_fundamental_form(const MetricField& metric,
                                              const SurfacePatch& surface, const Point& p,
                                              SecondFormConvention convention) {
  require_on(surface, p);
  return second_fundamental_form(local_geometry(metric, p, 1), surface, convention);
}

Mat newton_tensor(const SecondFundamentalForm& sff) { return sff.pi - sff.mean * sff.induced; }

Mat newton_tensor(const MetricField& metric, const SurfacePatch& surface, const Point& p,
                  SecondFormConvention convention) {
  return newton_tensor(second_fundamental_form(metric, surface, p, convention));
}

}  // namespace asymass
