#pragma once

#include <optional>
#include <string_view>

#include "asymass/geomcore/metric_field.hpp"
#include "asymass/geomcore/tensor_calculus.hpp"
#include "asymass/quad/patch.hpp"

namespace asymass {

/// Unit normals at a point of a patch, normalized in the metric that was
/// passed to surface_frame().
///  - hemisphere: mu, pointing towards increasing r;
///  - boundary annulus: eta (outward, decreasing x_n) and nu = -eta;
///  - corner sphere: all of the above plus the conormal theta, tangent to
///    Sigma, orthogonal to the corner sphere inside Sigma and pointing
///    towards increasing r.
struct SurfaceFrame {
  Point p;
  std::optional<Vec> mu;
  std::optional<Vec> eta;
  std::optional<Vec> nu;
  std::optional<Vec> conormal;
};

/// Throws DomainError when p is farther than 1e-10 (relative) from the patch.
SurfaceFrame surface_frame(const MetricField& metric, const SurfacePatch& surface,
                           const Point& p);
SurfaceFrame surface_frame(const LocalGeometry& geo, const SurfacePatch& surface);

/// Orientation convention for the second fundamental form of a surface with
/// outward unit normal N (eta on Sigma, mu on hemispheres):
///   outward: Pi(U, V) = g(nabla_U N, V)   (= g(nabla_U V, -N))
///   inward:  Pi(U, V) = g(nabla_U (-N), V)
/// The outward form is the one for which the contracted Codazzi identity
/// div J = Ric(eta, .) holds on Sigma; see verify::codazzi_residual.
enum class SecondFormConvention { outward, inward };

inline constexpr SecondFormConvention kSecondFormConvention = SecondFormConvention::outward;

std::string_view to_string(SecondFormConvention c);
std::string_view describe(SecondFormConvention c);

/// Second fundamental form as an ambient bilinear form: Pi(U, V) = U^T pi V,
/// vanishing whenever U or V is normal. H is its trace in the induced metric.
struct SecondFundamentalForm {
  Mat pi;
  double mean = 0.0;
  Vec normal;        // the outward unit normal N used
  Mat induced;       // g restricted to the tangent space, as an ambient form
};

/// Valid for hemispheres and Sigma (boundary annulus or corner sphere points).
SecondFundamentalForm second_fundamental_form(
    const MetricField& metric, const SurfacePatch& surface, const Point& p,
    SecondFormConvention convention = kSecondFormConvention);
SecondFundamentalForm second_fundamental_form(
    const LocalGeometry& geo, const SurfacePatch& surface,
    SecondFormConvention convention = kSecondFormConvention);

/// Newton tensor J = Pi - H g|_surface (ambient bilinear form).
Mat newton_tensor(const MetricField& metric, const SurfacePatch& surface, const Point& p,
                  SecondFormConvention convention = kSecondFormConvention);
Mat newton_tensor(const SecondFundamentalForm& sff);

}  // namespace asymass
