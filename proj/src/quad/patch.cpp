#include "asymass/quad/patch.hpp"

#include <cmath>

namespace asymass {

std::string_view to_string(PatchKind kind) {
  switch (kind) {
    case PatchKind::hemisphere:
      return "hemisphere";
    case PatchKind::corner_sphere:
      return "corner-sphere";
    case PatchKind::boundary_annulus:
      return "boundary-annulus";
    case PatchKind::half_annulus:
      return "half-annulus";
  }
  return "unknown";
}

int SurfacePatch::param_count() const {
  switch (kind) {
    case PatchKind::hemisphere:
      return dim - 1;
    case PatchKind::corner_sphere:
      return dim - 2;
    case PatchKind::boundary_annulus:
      return dim - 1;
    case PatchKind::half_annulus:
      return dim;
  }
  return 0;
}

Embedding unit_sphere(int k, const double* angles) {
  Embedding e;
  e.count = k;
  e.x = Vec(k + 1);
  if (k == 1) {
    e.x << std::cos(angles[0]), std::sin(angles[0]);
    e.tangents[0] = Vec(2);
    e.tangents[0] << -std::sin(angles[0]), std::cos(angles[0]);
    return e;
  }
  const double s = std::sin(angles[0]);
  const double c = std::cos(angles[0]);
  const Embedding inner = unit_sphere(k - 1, angles + 1);
  e.x.head(k) = s * inner.x;
  e.x(k) = c;
  e.tangents[0] = Vec(k + 1);
  e.tangents[0].head(k) = c * inner.x;
  e.tangents[0](k) = -s;
  for (int a = 0; a < k - 1; ++a) {
    e.tangents[a + 1] = Vec::Zero(k + 1);
    e.tangents[a + 1].head(k) = s * inner.tangents[a];
  }
  return e;
}

namespace {

// Lifts an embedding of S^{n-2} in R^{n-1} into the hyperplane x_n = 0.
Embedding lift_to_boundary(const Embedding& e, int n) {
  Embedding out;
  out.count = e.count;
  out.x = Vec::Zero(n);
  out.x.head(n - 1) = e.x;
  for (int a = 0; a < e.count; ++a) {
    out.tangents[a] = Vec::Zero(n);
    out.tangents[a].head(n - 1) = e.tangents[a];
  }
  return out;
}

Embedding scaled(const Embedding& e, double r) {
  Embedding out = e;
  out.x *= r;
  for (int a = 0; a < e.count; ++a) out.tangents[a] *= r;
  return out;
}

// Prepends a radial parameter t: x = t * w(u).
Embedding radial(const Embedding& unit, double t) {
  Embedding out;
  out.count = unit.count + 1;
  out.x = t * unit.x;
  out.tangents[0] = unit.x;
  for (int a = 0; a < unit.count; ++a) out.tangents[a + 1] = t * unit.tangents[a];
  return out;
}

}  // namespace

Embedding embed(const SurfacePatch& patch, const double* params) {
  const int n = patch.dim;
  switch (patch.kind) {
    case PatchKind::hemisphere:
      return scaled(unit_sphere(n - 1, params), patch.outer);
    case PatchKind::corner_sphere:
      return scaled(lift_to_boundary(unit_sphere(n - 2, params), n), patch.outer);
    case PatchKind::boundary_annulus:
      return radial(lift_to_boundary(unit_sphere(n - 2, params + 1), n), params[0]);
    case PatchKind::half_annulus:
      return radial(unit_sphere(n - 1, params + 1), params[0]);
  }
  return {};
}

bool on_patch(const SurfacePatch& patch, const Point& p) {
  const int n = patch.dim;
  if (p.size() != n) return false;
  const double r = p.norm();
  const double tol = 1e-10 * std::max(1.0, patch.outer);
  switch (patch.kind) {
    case PatchKind::hemisphere:
      return std::abs(r - patch.outer) <= tol && p(n - 1) >= -tol;
    case PatchKind::corner_sphere:
      return std::abs(r - patch.outer) <= tol && std::abs(p(n - 1)) <= tol;
    case PatchKind::boundary_annulus:
      return std::abs(p(n - 1)) <= tol && r >= patch.inner - tol && r <= patch.outer + tol;
    case PatchKind::half_annulus:
      return p(n - 1) >= -tol && r >= patch.inner - tol && r <= patch.outer + tol;
  }
  return false;
}

}  // namespace asymass
