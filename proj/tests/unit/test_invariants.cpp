#include <doctest.h>

#include <cmath>

#include "asymass/catalog/catalog.hpp"
#include "asymass/errors.hpp"
#include "asymass/invariants/invariants.hpp"

using namespace asymass;

namespace {

InvariantRequest request(const CatalogMetric& c) {
  return InvariantRequest(c.physical, c.reference, c.model, c.decay_tau);
}

}  // namespace

TEST_CASE("functional names round-trip") {
  for (Functional f : {Functional::mass_adm, Functional::mass_geometric, Functional::mass_bulk,
                       Functional::center_adm, Functional::center_geometric, Functional::hyp_charge,
                       Functional::hyp_geometric})
    CHECK(functional_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(functional_from_string("bondi"), ConfigError);
  CHECK(model_of(Functional::hyp_charge) == Model::hyperbolic);
  CHECK(is_indexed(Functional::center_adm));
  CHECK_FALSE(is_indexed(Functional::mass_bulk));
}

TEST_CASE("radii ladders") {
  const auto flat = RadiiLadder::defaults(Model::flat).radii(Model::flat);
  REQUIRE(flat.size() >= 3);
  CHECK(flat[1] / flat[0] == doctest::Approx(2.0));
  const auto hyp = RadiiLadder::defaults(Model::hyperbolic).radii(Model::hyperbolic);
  CHECK(hyp[1] - hyp[0] == doctest::Approx(0.25));
}

TEST_CASE("cutoff") {
  CHECK(cutoff(1.0, 4.0)[0] == 0.0);
  CHECK(cutoff(3.5, 4.0)[0] == 1.0);
  CHECK(cutoff(2.5, 4.0)[0] == doctest::Approx(0.5));
  CHECK(cutoff(3.0, 4.0)[1] == 0.0);
}

TEST_CASE("charge_flux: Schwarzschild at a finite radius") {
  // Closed forms of the finite-radius flux: n = 3 gives m (2R + m)^3 / (16 R^3),
  // n = 4 gives m (2R^2 + m) / (4 R^2).
  for (int n : {3, 4}) {
    const CatalogMetric s = catalog_build({"schwarzschild_half", n, {{"m", 1.0}}});
    const InvariantRequest req = request(s);
    const FluxSample f = charge_flux(req, static_potentials(Model::flat, n)[0], 4.0);
    CHECK(f.value == doctest::Approx(n == 3 ? 0.7119140625 : 0.515625).epsilon(1e-11));
  }
}

TEST_CASE("charge_flux: AdS-Schwarzschild at a finite radius") {
  const CatalogMetric ads = catalog_build({"ads_schwarzschild_half", 3, {{"m", 1.0}}});
  const InvariantRequest req = request(ads);
  const ScalarField w0 = static_potentials(Model::hyperbolic, 3)[0];
  CHECK(charge_flux(req, w0, 3.0).value == doctest::Approx(0.50098678697738369).epsilon(1e-10));
  // Further out the flux is a difference of terms of size sinh^2(rho).
  CHECK(charge_flux(req, w0, 4.0).value == doctest::Approx(0.50004914205006449).epsilon(1e-8));
}

TEST_CASE("flat model: every functional vanishes at every radius") {
  for (int n : {3, 4}) {
    const CatalogMetric e = catalog_build({"euclidean_half", n, {}});
    InvariantRequest req = request(e);
    req.ladder.count = 3;
    for (Functional f : {Functional::mass_adm, Functional::mass_geometric}) {
      const MassReport r = evaluate(req, f);
      for (const Sample& s : r.samples) CHECK(std::abs(s.value) < 1e-10);
    }
  }
}

TEST_CASE("hyperbolic model: every functional vanishes") {
  const CatalogMetric h = catalog_build({"hyperbolic_half", 3, {}});
  InvariantRequest req = request(h);
  req.ladder.count = 3;
  for (int a = 0; a < 3; ++a) {
    for (Functional f : {Functional::hyp_charge, Functional::hyp_geometric}) {
      const MassReport r = evaluate(req, f, a);
      for (const Sample& s : r.samples) CHECK(std::abs(s.value) < 1e-10);
    }
  }
}

TEST_CASE("modified_einstein vanishes on the model") {
  const MetricField b = hyperbolic_metric(4);
  Point p = Point::Constant(4, 0.2);
  CHECK(modified_einstein(b, b, p).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("centers require a nonzero mass") {
  const CatalogMetric e = catalog_build({"euclidean_half", 3, {}});
  InvariantRequest req = request(e);
  req.mass = 0.0;
  CHECK_THROWS_AS(center_adm(req, 1), DegenerateMassError);
  CHECK_THROWS_AS(center_geometric(req, 1), DegenerateMassError);
  req.mass = 1.0;
  CHECK_THROWS_AS(center_adm(req, 3), ConfigError);
}

TEST_CASE("expected_rate") {
  CHECK(expected_rate(Model::flat, 3, 1.0) == 1.0);
  CHECK(expected_rate(Model::hyperbolic, 3, 3.0) == 3.0);
}

TEST_CASE("mass_adm: Schwarzschild limit") {
  const CatalogMetric s = catalog_build({"schwarzschild_half", 3, {{"m", 1.0}}});
  InvariantRequest req = request(s);
  req.rule = {16, 32, 8};
  const MassReport r = mass_adm(req);
  CHECK(r.limit() == doctest::Approx(0.5).epsilon(1e-4));
  CHECK_FALSE(r.flagged());
}
