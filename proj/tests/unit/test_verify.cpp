#include <doctest.h>

#include <cmath>

#include "asymass/catalog/catalog.hpp"
#include "asymass/errors.hpp"
#include "asymass/verify/verify.hpp"

using namespace asymass;

namespace {

Point pt(std::initializer_list<double> v) {
  Point p(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) p(i++) = x;
  return p;
}

}  // namespace

TEST_CASE("pohozaev: K = g, Y = 0 is trivial") {
  Rng rng(3);
  const MetricField g = random_metric(3, 0.1, rng);
  const VectorField zero = VectorField::from_jets(3, [](const std::vector<Jet>&) {
    return std::vector<Jet>(3, Jet(3, 0.0));
  });
  CHECK(pohozaev_residual(g, Sym2Field::from_metric(g), zero, pt({0.2, -0.4, 0.1})) == 0.0);
}

TEST_CASE("pohozaev: random instances") {
  const ResidualReport exact = pohozaev_check(3, 20, 7, Backend::analytic(), 1e-8);
  CHECK(exact.pass);
  CHECK(exact.max < 1e-8);
  const ResidualReport fd = pohozaev_check(3, 10, 7, Backend::fd4(), 1e-5);
  CHECK(fd.pass);
  // Same seed, same instances.
  CHECK(pohozaev_check(3, 20, 7, Backend::analytic(), 1e-8).max == exact.max);
}

TEST_CASE("pohozaev: finite difference order") {
  const OrderEstimate o4 = pohozaev_order(3, 4, 5, BackendKind::fd4, {0.04, 0.02, 0.01});
  CHECK(o4.order == doctest::Approx(4.0).epsilon(0.125));
  const OrderEstimate o2 = pohozaev_order(3, 4, 5, BackendKind::fd2, {0.04, 0.02, 0.01});
  CHECK(o2.order == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("codazzi: catalog metrics") {
  const auto points = boundary_points(3, 10, 2.0, 6.0, 1);
  for (const char* name : {"euclidean_half", "schwarzschild_half", "generic_perturbation"}) {
    const CatalogMetric c = catalog_build({name, 3, {}});
    CHECK(codazzi_check(c.physical, points, 1e-5).pass);
  }
  // The flipped sign of Pi leaves a residual of twice |Ric(eta, .)|.
  const CatalogMetric g = catalog_build({"generic_perturbation", 3, {}});
  CHECK(codazzi_residual(g.physical, points[0], SecondFormConvention::inward) > 1e-6);
}

TEST_CASE("tangent flux: euclidean") {
  CHECK(tangent_flux_residual(euclidean_metric(3), pt({1, 0, 0}), pt({2, 1, 0})) < 1e-12);
}

TEST_CASE("static potentials") {
  const auto points = boundary_points(3, 8, 1.0, 3.0, 2);
  CHECK(static_check(Model::flat, 3, points, 1e-12).max == 0.0);
  CHECK(static_check(Model::hyperbolic, 3, points, 1e-8).pass);

  // x_n has vanishing Hessian but a unit normal derivative.
  const ScalarField xn = ScalarField::from_jets(3, [](const std::vector<Jet>& x) { return x[2]; });
  const StaticResidual r = static_residual(euclidean_metric(3), xn, pt({1, 2, 0}));
  CHECK(r.tensor == 0.0);
  REQUIRE(r.boundary);
  CHECK(std::abs(*r.boundary) == doctest::Approx(1.0));
}

TEST_CASE("fit_decay: synthetic rates") {
  std::vector<double> radii, power, expo;
  for (int k = 0; k < 6; ++k) {
    const double r = 8.0 * std::pow(2.0, k);
    radii.push_back(r);
    power.push_back(3.0 * std::pow(r, -1.3) * (1.0 + 0.01 / r));
  }
  CHECK(fit_decay(radii, power, DecayModel::power_law).rate == doctest::Approx(1.3).epsilon(0.01));

  std::vector<double> rho;
  for (int k = 0; k < 6; ++k) {
    rho.push_back(3.0 + 0.5 * k);
    expo.push_back(0.7 * std::exp(-2.4 * rho.back()));
  }
  CHECK(fit_decay(rho, expo, DecayModel::exponential).rate == doctest::Approx(2.4).epsilon(0.01));

  const DecayFit zero = fit_decay(radii, std::vector<double>(6, 0.0), DecayModel::power_law);
  CHECK(zero.vanishing);
  CHECK(std::isinf(zero.rate));
}

TEST_CASE("decay_report: admission") {
  const CatalogMetric s = catalog_build({"schwarzschild_half", 3, {}});
  DecayOptions opt;
  opt.inner_radius = s.inner_radius;
  const DecayReport ok = decay_report(s.physical, Model::flat, s.decay_tau, opt);
  CHECK(ok.admit);
  CHECK(ok.fitted_tau == doctest::Approx(1.0).epsilon(0.05));

  const CatalogMetric slow = catalog_build({"generic_perturbation", 3, {{"tau", 0.4}, {"m", 0.0}}}, false);
  const DecayReport bad = decay_report(slow.physical, Model::flat, slow.decay_tau, opt);
  CHECK_FALSE(bad.admit);
  CHECK_FALSE(bad.reason.empty());
  CHECK_THROWS_AS(catalog_build({"generic_perturbation", 3, {{"tau", 0.4}}}), AdmissionError);
}
