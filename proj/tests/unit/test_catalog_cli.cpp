#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymass/catalog/catalog.hpp"
#include "asymass/cli/cli.hpp"
#include "asymass/errors.hpp"

using namespace asymass;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "asymass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kFast = {"--quad", "16,32,8", "--radii", "4,2,4"};

std::vector<std::string> with_fast(std::vector<std::string> args) {
  args.insert(args.end(), kFast.begin(), kFast.end());
  return args;
}

}  // namespace

TEST_CASE("catalog: entries build and carry their declared data") {
  for (const CatalogInfo& info : catalog_entries()) {
    const CatalogMetric c = catalog_build({info.name, 3, {}});
    CHECK(c.model == info.model);
    CHECK(c.decay_tau > decay_threshold(c.model, 3));
    Point p = Point::Zero(3);
    p(0) = c.model == Model::flat ? 7.0 : 3.0;
    p(2) = 1.0;
    const Mat g = c.physical.value(p);
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(g.ldlt().vectorD().minCoeff() > 0.0);
  }
  CHECK(catalog_build({"schwarzschild_half", 4, {{"m", 2.0}}}).params.at("m") == 2.0);
}

TEST_CASE("catalog: invalid requests") {
  CHECK_THROWS_AS(catalog_build({"kerr", 3, {}}), ConfigError);
  CHECK_THROWS_AS(catalog_build({"schwarzschild_half", 3, {{"spin", 1.0}}}), ConfigError);
  CHECK_THROWS_AS(catalog_build({"schwarzschild_half", 2, {}}), ConfigError);
  CHECK_THROWS_AS(catalog_build({"schwarzschild_half", 3, {{"m", -1.0}}}), ConfigError);
  CHECK_THROWS_AS(catalog_build({"schwarzschild_half", 3, {{"a3", 1.0}}}), ConfigError);
}

TEST_CASE("catalog: translated Schwarzschild is centered at a") {
  const CatalogMetric s = catalog_build({"schwarzschild_half", 3, {{"a1", 0.7}, {"a2", -0.3}}});
  Point p(3);
  p << 3.7, 1.7, 2.0;
  const double r = std::sqrt(9.0 + 4.0 + 4.0);
  CHECK(s.physical.value(p)(1, 1) == doctest::Approx(std::pow(1.0 + 0.5 / r, 4)).epsilon(1e-14));
}

TEST_CASE("config: parsing and unknown keys") {
  const RunConfig c = parse_config(R"({"metric": {"name": "schwarzschild_half", "n": 4,
      "params": {"m": 2}}, "radii": {"start": 8, "factor": 2, "count": 5},
      "quad": {"polar": 12, "azimuth": 24, "radial": 6}, "backend": "fd4",
      "functionals": ["mass_adm"], "seed": 9})");
  CHECK(c.metric.n == 4);
  CHECK(c.metric.params.at("m") == 2.0);
  CHECK(c.radii->count == 5);
  CHECK(c.quad->azimuth == 24);
  CHECK(c.backend == BackendKind::fd4);
  CHECK(c.seed == 9);

  CHECK_THROWS_AS(parse_config(R"({"metrc": {}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"metric": {"name": "euclidean_half", "dim": 3}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"quad": {"polar": 4, "theta": 2}})"), ConfigError);
  CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
}

TEST_CASE("report JSON round-trips bit-exactly") {
  const Run r = run(with_fast({"mass", "--metric", "schwarzschild_half", "--functional", "mass_adm"}));
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.is_array());
  const MassReport back = report_from_json(doc[0].dump());
  CHECK(back.limit() == doc[0]["limit"].get<double>());
  ReportContext ctx;
  ctx.metric = "schwarzschild_half";
  const json again = json::parse(report_json(back, ctx));
  CHECK(again["samples"] == doc[0]["samples"]);
  CHECK(again["limit"] == doc[0]["limit"]);
  CHECK(again["running"] == doc[0]["running"]);

  MassReport inf;
  inf.functional = "mass_adm";
  inf.samples = {{4, 1}, {8, 1}, {16, 1}};
  inf.fit.rate = INFINITY;
  inf.fit.limit = 1.0;
  const MassReport inf_back = report_from_json(report_json(inf, ctx));
  CHECK(std::isinf(inf_back.rate()));
}

TEST_CASE("cli: repeated runs are byte-identical") {
  const auto args = with_fast({"center", "--metric", "schwarzschild_half", "--param", "a1=0.7",
                               "--functional", "center_adm", "--index", "1", "--workers", "2"});
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: exit codes") {
  CHECK(run(with_fast({"mass", "--metric", "euclidean_half"})).code == 0);
  CHECK(run({"catalog", "list"}).code == 0);

  const Run unknown = run({"mass", "--metric", "kerr"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("kerr") != std::string::npos);
  CHECK(run({"mass", "--metric", "schwarzschild_half", "--param", "m=-1"}).code == 2);
  CHECK(run({"mass", "--bogus"}).code == 2);
  CHECK(run({"mass", "--metric", "schwarzschild_half", "--param", "m"}).code == 2);
  CHECK(run(with_fast({"center", "--metric", "euclidean_half", "--functional", "center_adm"})).code == 2);

  const Run slow = run({"decay", "--metric", "generic_perturbation", "--param", "tau=0.4"});
  CHECK(slow.code == 2);
  CHECK_FALSE(slow.out.empty());
  CHECK(run({"decay", "--metric", "schwarzschild_half"}).code == 0);
}

TEST_CASE("cli: config file with flag override and file outputs") {
  const auto dir = std::filesystem::temp_directory_path() / "asymass_cli_test";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "run.json";
  std::ofstream(cfg) << R"({"metric": {"name": "schwarzschild_half", "params": {"m": 2}},
      "quad": {"polar": 16, "azimuth": 32, "radial": 8},
      "radii": {"start": 4, "factor": 2, "count": 4}, "functionals": ["mass_adm"]})";
  const auto out = dir / "report.json";
  const Run r = run({"mass", "--config", cfg.string(), "--param", "m=1", "--format", "both", "--out",
                     out.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  const json doc = json::parse(in);
  CHECK(doc[0]["params"]["m"].get<double>() == 1.0);
  CHECK(doc[0]["limit"].get<double>() == doctest::Approx(0.5).epsilon(0.01));
  std::ifstream csv(dir / "report_mass_adm.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "r,value,running_extrapolant,abs_delta");
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli: version") {
  const Run v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(version_string()) != std::string::npos);
}
