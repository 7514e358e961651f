#include <doctest.h>

#include <cmath>
#include <numbers>

#include "asymass/asymfields/asymfields.hpp"
#include "asymass/boundary/boundary.hpp"
#include "asymass/catalog/catalog.hpp"
#include "asymass/errors.hpp"
#include "asymass/geomcore/polar.hpp"

using namespace asymass;

namespace {

Point pt(std::initializer_list<double> v) {
  Point p(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) p(i++) = x;
  return p;
}

CatalogMetric schwarzschild(int n = 3) { return catalog_build({"schwarzschild_half", n, {{"m", 1.0}}}); }

}  // namespace

TEST_CASE("surface_frame: flat normals") {
  const MetricField flat = euclidean_metric(3);
  const SurfaceFrame sigma =
      surface_frame(flat, SurfacePatch::boundary_annulus(3, 1.0, 5.0), pt({2.0, 1.0, 0.0}));
  REQUIRE(sigma.eta);
  CHECK((*sigma.eta - pt({0, 0, -1})).norm() < 1e-15);
  CHECK((*sigma.nu - pt({0, 0, 1})).norm() < 1e-15);

  const Point p = pt({1.2, -0.9, std::sqrt(4.0 - 1.44 - 0.81)});
  const SurfaceFrame hemi = surface_frame(flat, SurfacePatch::hemisphere(3, 2.0), p);
  REQUIRE(hemi.mu);
  CHECK((*hemi.mu - p / 2.0).norm() < 1e-14);

  const SurfaceFrame corner =
      surface_frame(flat, SurfacePatch::corner_sphere(3, 2.0), pt({1.2, 1.6, 0.0}));
  REQUIRE(corner.conormal);
  CHECK((*corner.conormal - pt({0.6, 0.8, 0.0})).norm() < 1e-14);
}

TEST_CASE("surface_frame: off-surface point raises") {
  CHECK_THROWS_AS(surface_frame(euclidean_metric(3), SurfacePatch::hemisphere(3, 2.0), pt({1, 1, 1})),
                  DomainError);
}

TEST_CASE("surface_frame: Schwarzschild normal is the rescaled flat normal") {
  const CatalogMetric s = schwarzschild();
  const Point p = pt({3.0, -1.0, 0.0});
  const double u = 1.0 + 0.5 / p.norm();
  const SurfaceFrame f = surface_frame(s.physical, SurfacePatch::boundary_annulus(3, 1.0, 9.0), p);
  CHECK((*f.eta - pt({0, 0, -1.0 / (u * u)})).norm() < 1e-14);
}

TEST_CASE("second_fundamental_form: totally geodesic boundaries") {
  const SurfacePatch sigma = SurfacePatch::boundary_annulus(3, 1.0, 9.0);
  const Point p = pt({3.0, -1.0, 0.0});
  for (const MetricField& g : {euclidean_metric(3), schwarzschild().physical}) {
    const SecondFundamentalForm sff = second_fundamental_form(g, sigma, p);
    CHECK(sff.pi.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(sff.mean) < 1e-14);
    CHECK(newton_tensor(sff).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("second_fundamental_form: round hemisphere") {
  for (int n : {3, 4}) {
    Point p = Point::Zero(n);
    p(0) = 1.0;
    p(n - 1) = std::sqrt(3.0);
    const SurfacePatch hemi = SurfacePatch::hemisphere(n, 2.0);
    const double out = second_fundamental_form(euclidean_metric(n), hemi, p).mean;
    const double in =
        second_fundamental_form(euclidean_metric(n), hemi, p, SecondFormConvention::inward).mean;
    CHECK(out == doctest::Approx(0.5 * (n - 1)));
    CHECK(in == doctest::Approx(-0.5 * (n - 1)));
  }
}

TEST_CASE("newton_tensor: generic perturbation matches the symbolic oracle") {
  const CatalogMetric g = catalog_build({"generic_perturbation", 3, {}});
  const Point p = pt({6.4, -4.8, 0.0});
  const SurfacePatch sigma = SurfacePatch::boundary_annulus(3, 4.0, 16.0);
  const SecondFundamentalForm sff = second_fundamental_form(g.physical, sigma, p);
  const Mat j = newton_tensor(sff);
  CHECK(sff.mean == doctest::Approx(-0.0031843150403342215).epsilon(1e-10));
  CHECK(j(0, 0) == doctest::Approx(0.0020466850687030451).epsilon(1e-10));
  CHECK(j(0, 1) == doctest::Approx(0.0000098286782791200313).epsilon(1e-7));
  CHECK(j(1, 1) == doctest::Approx(0.0020235598791541996).epsilon(1e-10));
  // Trace of J in the induced metric is (2 - n) H.
  const Mat h = g.physical.value(p).topLeftCorner(2, 2);
  CHECK((h.inverse() * j.topLeftCorner(2, 2)).trace() == doctest::Approx(-sff.mean).epsilon(1e-10));
}

TEST_CASE("charge_one_form") {
  const CatalogMetric s = schwarzschild();
  const MetricField flat = euclidean_metric(3);
  const Point p = pt({10.0, 0.0, 0.0});
  const LocalGeometry ref = local_geometry(flat, p, 1);

  const Perturbation zero = perturbation(flat, flat, p);
  CHECK(charge_one_form(ref, zero, 1.7, pt({0.3, 0.1, -0.2})).norm() == 0.0);

  // w = 1: div e - d tr e for e = (u^4 - 1) delta.
  const Vec u = charge_one_form(ref, perturbation(s.physical, flat, p), 1.0, Vec::Zero(3));
  CHECK(u(0) == doctest::Approx(0.046305).epsilon(1e-12));
  CHECK(std::abs(u(1)) + std::abs(u(2)) < 1e-16);
}

TEST_CASE("static potentials and conformal fields") {
  const auto flat = static_potentials(Model::flat, 3);
  REQUIRE(flat.size() == 3);
  const Point p = pt({3.0, 4.0, 0.0});
  CHECK(flat[0].value(p) == 1.0);
  CHECK(flat[1].value(p) == 3.0);
  CHECK(flat[2].value(p) == 4.0);

  CHECK((conformal_field(Model::flat, 3, 0).value(p) - p).norm() == 0.0);
  CHECK((conformal_field(Model::flat, 3, 1).value(pt({1, 0, 2})) - pt({3, 0, -4})).norm() < 1e-15);
  CHECK_THROWS_AS(conformal_field(Model::flat, 3, 3), DomainError);

  // X_0 = grad_b cosh(rho) has divergence n cosh(rho).
  const MetricField b = hyperbolic_metric(3);
  const Point y = chart_from_polar({1.0, pt({0.6, 0.0, 0.8})});
  const KillingDeformation k = killing_deformation(b, conformal_field(Model::hyperbolic, 3, 0), y);
  CHECK(k.div == doctest::Approx(3.0 * std::cosh(1.0)).epsilon(1e-12));
  CHECK(k.trace_free.cwiseAbs().maxCoeff() < 1e-12);
  for (int a = 1; a < 3; ++a) {
    const KillingDeformation ka = killing_deformation(b, conformal_field(Model::hyperbolic, 3, a), y);
    CHECK(ka.div == doctest::Approx(3.0 * y(a - 1)).epsilon(1e-12));
    CHECK(ka.trace_free.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("odd_part") {
  const ScalarField sq = ScalarField::from_jets(3, [](const std::vector<Jet>& x) { return x[0] * x[0]; });
  const ScalarField lin = ScalarField::from_jets(3, [](const std::vector<Jet>& x) { return x[0]; });
  CHECK(odd_part(sq, pt({2, 1, 1})) == 0.0);
  CHECK(odd_part(lin, pt({2, 0, 1})) == 2.0);
  CHECK_THROWS_AS(odd_part(lin, pt({2, 0, -1})), DomainError);

  // g_11 of a translated Schwarzschild is not even; the centered one is.
  const CatalogMetric moved = catalog_build({"schwarzschild_half", 3, {{"a1", 0.7}}});
  const ScalarField g11(3, [&](const Point& q) { return moved.physical.value(q)(0, 0); });
  const Point p = pt({6.0, 2.0, 3.0});
  const double r1 = (p - pt({0.7, 0, 0})).norm(), r2 = (pt({-6.0, -2.0, 3.0}) - pt({0.7, 0, 0})).norm();
  const double oracle = 0.5 * (std::pow(1 + 0.5 / r1, 4) - std::pow(1 + 0.5 / r2, 4));
  CHECK(odd_part(g11, p) == doctest::Approx(oracle).epsilon(1e-13));
  const ScalarField c11(3, [&](const Point& q) { return schwarzschild().physical.value(q)(0, 0); });
  CHECK(std::abs(odd_part(c11, p)) < 1e-16);
}

TEST_CASE("constants") {
  const Constants k = Constants::of(3);
  CHECK(k.omega == doctest::Approx(4.0 * std::numbers::pi));
  CHECK(k.c == doctest::Approx(1.0 / (16.0 * std::numbers::pi)));
  CHECK(k.d == doctest::Approx(-1.0 / (8.0 * std::numbers::pi)));
  CHECK(Constants::of(4).omega == doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi));
  CHECK(decay_threshold(Model::flat, 3) == 0.5);
  CHECK(decay_threshold(Model::hyperbolic, 3) == 1.5);
}
