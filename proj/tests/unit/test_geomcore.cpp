#include <doctest.h>

#include <cmath>
#include <random>

#include "asymass/catalog/catalog.hpp"
#include "asymass/errors.hpp"
#include "asymass/geomcore/tensor_calculus.hpp"

using namespace asymass;

namespace {

Point pt(std::initializer_list<double> v) {
  Point p(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) p(i++) = x;
  return p;
}

// b = d rho^2 + sinh^2 rho (d theta^2 + sin^2 theta d phi^2)
MetricField hyperbolic_polar() {
  return MetricField::from_jets(3, MetricRole::reference_hyperbolic, [](const std::vector<Jet>& x) {
    JetSym g(3);
    const Jet sh = sinh(x[0]);
    g(0, 0) = Jet(3, 1.0);
    g(1, 1) = sh * sh;
    g(2, 2) = sh * sh * sin(x[1]) * sin(x[1]);
    return g;
  });
}

}  // namespace

TEST_CASE("christoffel: flat metric vanishes") {
  const Christoffel gamma = christoffel(euclidean_metric(4), pt({1, -2, 3, 0.5}));
  for (int k = 0; k < 4; ++k) CHECK(gamma[k].cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("christoffel: hyperbolic metric in geodesic polar coordinates") {
  const Christoffel gamma = christoffel(hyperbolic_polar(), pt({1.0, 0.7, 0.2}));
  // symbolic: Gamma^rho_{theta theta} = -sinh cosh, Gamma^rho_{phi phi} = -sinh cosh sin^2 theta
  CHECK(gamma[0](1, 1) == doctest::Approx(-1.8134302039235094).epsilon(1e-13));
  CHECK(gamma[0](2, 2) == doctest::Approx(-0.75260332665681449).epsilon(1e-13));
  CHECK(gamma[1](0, 1) == doctest::Approx(1.3130352854993313).epsilon(1e-13));
}

TEST_CASE("christoffel: hyperbolic metric in the Minkowski chart") {
  const Christoffel gamma = christoffel(hyperbolic_metric(3), pt({0.3, -0.2, 0.5}));
  CHECK(gamma[0](0, 0) == doctest::Approx(-0.28043478260869565).epsilon(1e-13));
  CHECK(gamma[0](1, 1) == doctest::Approx(-0.29130434782608696).epsilon(1e-13));
  CHECK(gamma[2](0, 2) == doctest::Approx(0.054347826086956522).epsilon(1e-13));
  CHECK(gamma[1](1, 2) == doctest::Approx(0.014492753623188406).epsilon(1e-13));
}

TEST_CASE("christoffel: Schwarzschild on the x1 axis") {
  const CatalogMetric s = catalog_build({"schwarzschild_half", 3, {{"m", 1.0}}});
  const Christoffel gamma = christoffel(s.physical, pt({2, 0, 0}));
  CHECK(gamma[0](0, 0) == doctest::Approx(-0.2).epsilon(1e-13));
  CHECK(gamma[0](1, 1) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(gamma[1](0, 1) == doctest::Approx(-0.2).epsilon(1e-13));
  CHECK(s.physical.value(pt({2, 0, 0}))(0, 0) == doctest::Approx(std::pow(1.25, 4)));
}

TEST_CASE("christoffel: singular metric raises") {
  const MetricField bad(3, MetricRole::physical, [](const Point&) { return Mat(Mat::Zero(3, 3)); });
  CHECK_THROWS_AS(christoffel(bad, pt({1, 1, 1})), SingularMetricError);
}

TEST_CASE("curvature: model spaces") {
  for (int n : {3, 4, 5}) {
    Point p = Point::Constant(n, 0.3);
    p(0) = -0.7;
    const Curvature flat = curvature(euclidean_metric(n), p);
    CHECK(flat.scalar == 0.0);
    const MetricField b = hyperbolic_metric(n);
    const Curvature hyp = curvature(b, p);
    CHECK(hyp.scalar == doctest::Approx(-n * (n - 1.0)).epsilon(1e-12));
    CHECK((hyp.ricci + (n - 1.0) * b.value(p)).cwiseAbs().maxCoeff() < 1e-12);
    const Mat e = einstein_tensor(b, p);
    CHECK((e - 0.5 * (n - 1) * (n - 2) * b.value(p)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("curvature: Schwarzschild is scalar flat") {
  const CatalogMetric s = catalog_build({"schwarzschild_half", 3, {{"m", 1.0}}});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    Point p = pt({u(rng), u(rng), std::abs(u(rng))});
    if (p.norm() < 1.0) continue;
    CHECK(std::abs(curvature(s.physical, p).scalar) < 1e-8);
  }
  CHECK(std::abs(curvature(s.physical, pt({1.3, -0.7, 0.9})).scalar) < 1e-12);
}

TEST_CASE("einstein_tensor: generic perturbation matches the symbolic oracle") {
  const CatalogMetric g = catalog_build({"generic_perturbation", 3, {}});
  const Mat e = einstein_tensor(g.physical, pt({6, -5, std::sqrt(39.0)}));
  const double oracle[3][3] = {{-0.00020295198948852101, 0.0010535779297786590, -0.0011843141471702887},
                               {0, 0.00019320128491946164, 0.00095798126692219800},
                               {0, 0, 0.0000080427096331000227}};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) CHECK(e(i, j) == doctest::Approx(oracle[i][j]).epsilon(1e-9));
}

TEST_CASE("div_sym2") {
  const CatalogMetric s = catalog_build({"schwarzschild_half", 3, {{"m", 1.0}}});
  const Point p = pt({2.5, -1.0, 1.5});
  CHECK(div_sym2(s.physical, Sym2Field::from_metric(s.physical), p).norm() < 1e-12);

  const Sym2Field k = Sym2Field::from_jets(3, [](const std::vector<Jet>& x) {
    JetSym out(3);
    for (int i = 0; i < 3; ++i) out(i, i) = x[0];
    return out;
  });
  const Vec d = div_sym2(euclidean_metric(3), k, p);
  CHECK(d(0) == doctest::Approx(1.0));
  CHECK(std::abs(d(1)) + std::abs(d(2)) < 1e-15);

  // Contracted Bianchi identity with E differentiated by finite differences.
  const Sym2Field einstein(3, [&](const Point& q) { return einstein_tensor(s.physical, q); });
  CHECK(div_sym2(s.physical, einstein, p).norm() < 1e-7);
}

TEST_CASE("killing_deformation: flat conformal fields") {
  const int n = 3;
  const MetricField flat = euclidean_metric(n);
  const Point p = pt({1.0, 0.5, 2.0});
  const VectorField rot = VectorField::from_jets(n, [](const std::vector<Jet>& x) {
    return std::vector<Jet>{-1.0 * x[1], x[0], Jet(3, 0.0)};
  });
  const KillingDeformation kr = killing_deformation(flat, rot, p);
  CHECK(kr.full.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(kr.div == 0.0);

  const KillingDeformation k0 = killing_deformation(flat, conformal_field(Model::flat, n, 0), p);
  CHECK(k0.trace_free.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(k0.div == doctest::Approx(n));
  for (int a = 1; a < n; ++a) {
    const KillingDeformation ka = killing_deformation(flat, conformal_field(Model::flat, n, a), p);
    CHECK(ka.trace_free.cwiseAbs().maxCoeff() < 1e-13);
    CHECK(ka.div == doctest::Approx(-2.0 * n * p(a - 1)));
  }
}

TEST_CASE("backends: finite differences agree with exact derivatives") {
  const CatalogMetric g = catalog_build({"generic_perturbation", 3, {}});
  const Point p = pt({4.0, -3.0, 2.0});
  const Curvature exact = curvature(g.physical, p);
  const Curvature fd4 = curvature(g.physical.with_backend(Backend::fd4()), p);
  const Curvature fd2 = curvature(g.physical.with_backend(Backend::fd2()), p);
  CHECK(std::abs(fd4.scalar - exact.scalar) < 1e-7);
  CHECK(std::abs(fd2.scalar - exact.scalar) < 1e-5);
  CHECK(backend_from_string("fd4") == BackendKind::fd4);
  CHECK_THROWS_AS(backend_from_string("spectral"), ConfigError);
}

TEST_CASE("rotated: boundary rotation is an isometry of the model") {
  const Mat q = boundary_rotation(3, 0.4);
  const MetricField b = rotated(hyperbolic_metric(3), q);
  const Point p = pt({0.4, 1.1, 0.3});
  CHECK((b.value(p) - hyperbolic_metric(3).value(p)).cwiseAbs().maxCoeff() < 1e-14);
}
