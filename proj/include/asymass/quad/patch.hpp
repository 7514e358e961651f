#pragma once

#include <string_view>
#include <vector>

#include "asymass/geomcore/types.hpp"

namespace asymass {

enum class PatchKind {
  hemisphere,        // S^{n-1}_{r,+} = {|x| = r, x_n >= 0}
  corner_sphere,     // S^{n-2}_r = {|x| = r, x_n = 0}
  boundary_annulus,  // Sigma_{r1,r2} = {r1 <= |x| <= r2, x_n = 0}
  half_annulus,      // M_{r1,r2} = {r1 <= |x| <= r2, x_n >= 0}
};

std::string_view to_string(PatchKind kind);

/// Integration domain in the chart. Radii are chart radii |x|; for the
/// hyperbolic model the hemisphere at geodesic radius rho has chart radius
/// sinh(rho).
struct SurfacePatch {
  PatchKind kind = PatchKind::hemisphere;
  int dim = 3;          // dimension n of the ambient manifold
  double inner = 0.0;   // annuli only
  double outer = 1.0;   // the radius for spheres
  /// Interior radial breakpoints for annuli; the radial rule is applied on
  /// every sub-interval so that piecewise-smooth integrands stay spectral.
  std::vector<double> breakpoints;

  static SurfacePatch hemisphere(int n, double r) { return {PatchKind::hemisphere, n, r, r, {}}; }
  static SurfacePatch corner_sphere(int n, double r) {
    return {PatchKind::corner_sphere, n, r, r, {}};
  }
  static SurfacePatch boundary_annulus(int n, double r1, double r2,
                                       std::vector<double> breaks = {}) {
    return {PatchKind::boundary_annulus, n, r1, r2, std::move(breaks)};
  }
  static SurfacePatch half_annulus(int n, double r1, double r2, std::vector<double> breaks = {}) {
    return {PatchKind::half_annulus, n, r1, r2, std::move(breaks)};
  }

  /// Number of parameters of the patch (its own dimension).
  int param_count() const;
};

/// A parameterization sample: chart point and the partials dx/du^a.
struct Embedding {
  Point x;
  std::array<Vec, kMaxDim> tangents;
  int count = 0;
};

/// Point on the unit sphere S^k in R^{k+1} from k angles. angles[0] is a polar
/// angle with the last coordinate equal to cos(angles[0]); the final angle is
/// the azimuth. Also returns d/d angle_a.
Embedding unit_sphere(int k, const double* angles);

/// Parameterization of a patch. Parameters are ordered (t, angles...) for
/// annuli and (angles...) for spheres; the hemisphere's first angle lies in
/// [0, pi/2] so that x_n = r cos(angle) >= 0.
Embedding embed(const SurfacePatch& patch, const double* params);

/// Euclidean distance-type check that a point lies on the patch (tolerance
/// 1e-10 relative to the radius).
bool on_patch(const SurfacePatch& patch, const Point& p);

}  // namespace asymass
