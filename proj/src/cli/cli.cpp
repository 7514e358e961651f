#include "asymass/cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "asymass/errors.hpp"
#include "asymass/geomcore/polar.hpp"

#ifndef ASYMASS_VERSION_STRING
#define ASYMASS_VERSION_STRING "0.0.0"
#endif

namespace asymass {

using json = nlohmann::json;

const char* version_string() { return ASYMASS_VERSION_STRING; }

namespace {

// --- JSON helpers ---------------------------------------------------------------

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double to_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ConfigError("expected a number, got " + j.dump());
}

void reject_unknown(const json& obj, std::initializer_list<const char*> keys,
                    const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ConfigError("unknown config key '" + where + key + "'");
  }
}

template <class T>
T get_as(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + where + key + "' has the wrong type");
  }
}

json point_json(const Point& p) {
  json a = json::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(p(i));
  return a;
}

json residual_json(const ResidualReport& r) {
  json pts = json::array(), res = json::array();
  for (const auto& p : r.points) pts.push_back(point_json(p));
  for (double v : r.residuals) res.push_back(number(v));
  return {{"identity", r.name},   {"max", number(r.max)},   {"rms", number(r.rms)},
          {"tolerance", r.tolerance}, {"pass", r.pass}, {"seed", r.seed},
          {"points", pts},        {"residuals", res}};
}

json fit_json(const DecayFit& f) {
  json vals = json::array();
  for (double v : f.values) vals.push_back(number(v));
  return {{"quantity", f.quantity}, {"radii", f.radii},   {"values", vals},
          {"rate", number(f.rate)}, {"tau", number(f.tau)}, {"vanishing", f.vanishing},
          {"gating", f.gating},     {"pass", f.pass}};
}

json decay_json(const DecayReport& d) {
  json fits = json::array(), odd = json::array();
  for (const auto& f : d.fits) fits.push_back(fit_json(f));
  for (const auto& f : d.odd) odd.push_back(fit_json(f));
  json out = {{"model", std::string(to_string(d.model))},
              {"n", d.n},
              {"threshold", d.threshold},
              {"fits", fits},
              {"fitted_tau", number(d.fitted_tau)},
              {"admit", d.admit},
              {"reason", d.reason}};
  out["declared_tau"] = d.declared_tau ? number(*d.declared_tau) : json(nullptr);
  if (d.model == Model::flat) {
    out["odd_part"] = odd;
    out["odd_condition"] = d.odd_condition;
  }
  return out;
}

std::vector<double> parse_triple(const std::string& text, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("malformed ") + what + " '" + text + "'");
    }
  }
  if (v.size() != 3) throw ConfigError(std::string(what) + " needs three comma-separated values");
  return v;
}

int as_count(double v, const char* what) {
  if (v != std::floor(v) || v < 1 || v > 1e6)
    throw ConfigError(std::string(what) + " must be a positive integer");
  return static_cast<int>(v);
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "both") return OutputFormat::both;
  throw ConfigError("unknown format '" + s + "' (expected json|csv|both)");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, {"metric", "radii", "quad", "backend", "functionals", "index", "out",
                       "format", "seed", "workers"},
                 "");
  RunConfig cfg;
  if (doc.contains("metric")) {
    const json& m = doc["metric"];
    reject_unknown(m, {"name", "n", "params"}, "metric.");
    if (m.contains("name")) cfg.metric.name = get_as<std::string>(m, "name", "metric.");
    if (m.contains("n")) cfg.metric.n = get_as<int>(m, "n", "metric.");
    if (m.contains("params")) {
      if (!m["params"].is_object()) throw ConfigError("metric.params must be an object");
      for (const auto& [k, v] : m["params"].items()) {
        if (!v.is_number()) throw ConfigError("metric.params." + k + " must be a number");
        cfg.metric.params[k] = v.get<double>();
      }
    }
  }
  if (doc.contains("radii")) {
    const json& r = doc["radii"];
    reject_unknown(r, {"start", "factor", "count"}, "radii.");
    RadiiLadder l = RadiiLadder::defaults(Model::flat);
    if (r.contains("start")) l.start = get_as<double>(r, "start", "radii.");
    if (r.contains("factor")) l.factor = get_as<double>(r, "factor", "radii.");
    if (r.contains("count")) l.count = get_as<int>(r, "count", "radii.");
    cfg.radii = l;
  }
  if (doc.contains("quad")) {
    const json& q = doc["quad"];
    reject_unknown(q, {"polar", "azimuth", "radial"}, "quad.");
    QuadratureRule rule;
    if (q.contains("polar")) rule.polar = get_as<int>(q, "polar", "quad.");
    if (q.contains("azimuth")) rule.azimuth = get_as<int>(q, "azimuth", "quad.");
    if (q.contains("radial")) rule.radial = get_as<int>(q, "radial", "quad.");
    cfg.quad = rule;
  }
  if (doc.contains("backend"))
    cfg.backend = backend_from_string(get_as<std::string>(doc, "backend", ""));
  if (doc.contains("functionals"))
    cfg.functionals = get_as<std::vector<std::string>>(doc, "functionals", "");
  if (doc.contains("index")) cfg.index = get_as<int>(doc, "index", "");
  if (doc.contains("out")) cfg.out = get_as<std::string>(doc, "out", "");
  if (doc.contains("format")) cfg.format = format_from_string(get_as<std::string>(doc, "format", ""));
  if (doc.contains("seed")) cfg.seed = get_as<std::uint64_t>(doc, "seed", "");
  if (doc.contains("workers")) cfg.workers = get_as<int>(doc, "workers", "");
  return cfg;
}

std::string report_json(const MassReport& r, const ReportContext& ctx) {
  json samples = json::array(), running = json::array();
  for (const auto& s : r.samples) samples.push_back({{"r", s.r}, {"value", number(s.value)}});
  for (double v : r.fit.running) running.push_back(number(v));
  json conventions = json::object();
  for (const auto& [k, v] : r.conventions) conventions[k] = v;
  json doc = {
      {"functional", r.functional},
      {"component", r.component},
      {"metric", ctx.metric},
      {"n", ctx.n},
      {"params", ctx.params},
      {"samples", samples},
      {"running", running},
      {"limit", number(r.limit())},
      {"error", number(r.error())},
      {"rate", number(r.rate())},
      {"expected_rate", number(r.expected_rate)},
      {"scale", number(r.scale)},
      {"flagged", r.flagged()},
      {"warnings", r.fit.warnings},
      {"conventions", conventions},
      {"quadrature",
       {{"polar", ctx.quad.polar}, {"azimuth", ctx.quad.azimuth}, {"radial", ctx.quad.radial}}},
      {"backend", std::string(to_string(ctx.backend))},
      {"radii",
       {{"start", ctx.ladder.start}, {"factor", ctx.ladder.factor}, {"count", ctx.ladder.count}}},
      {"seed", ctx.seed},
      {"version", version_string()},
  };
  return doc.dump(2);
}

MassReport report_from_json(const std::string& text) {
  const json doc = json::parse(text);
  MassReport r;
  r.functional = doc.at("functional").get<std::string>();
  r.component = doc.at("component").get<int>();
  for (const auto& s : doc.at("samples"))
    r.samples.push_back({s.at("r").get<double>(), to_number(s.at("value"))});
  for (const auto& v : doc.at("running")) r.fit.running.push_back(to_number(v));
  r.fit.limit = to_number(doc.at("limit"));
  r.fit.error = to_number(doc.at("error"));
  r.fit.rate = to_number(doc.at("rate"));
  r.fit.flagged = doc.at("flagged").get<bool>();
  r.fit.warnings = doc.at("warnings").get<std::vector<std::string>>();
  r.expected_rate = to_number(doc.at("expected_rate"));
  r.scale = to_number(doc.at("scale"));
  for (const auto& [k, v] : doc.at("conventions").items()) r.conventions[k] = v.get<std::string>();
  return r;
}

std::string report_csv(const MassReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "r,value,running_extrapolant,abs_delta\n";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const double run = i < r.fit.running.size() ? r.fit.running[i] : r.samples[i].value;
    os << r.samples[i].r << ',' << r.samples[i].value << ',' << run << ','
       << std::abs(r.samples[i].value - r.fit.limit) << '\n';
  }
  return os.str();
}

// --- command line ---------------------------------------------------------------

namespace {

struct Flags {
  std::string metric, radii, quad, backend, config, out, format;
  std::vector<std::string> params, functionals;
  int n = 0;
  int index = -1;
  long long seed = -1;
  int workers = -1;
};

void add_common(CLI::App* cmd, Flags& f, bool numerics) {
  cmd->add_option("--metric", f.metric, "catalog entry name");
  cmd->add_option("--param", f.params, "metric parameter KEY=VAL (repeatable)");
  cmd->add_option("--n", f.n, "dimension");
  cmd->add_option("--config", f.config, "JSON run configuration");
  cmd->add_option("--out", f.out, "output path for the JSON report");
  cmd->add_option("--seed", f.seed, "seed for randomized checks");
  if (!numerics) return;
  cmd->add_option("--radii", f.radii, "START,FACTOR,COUNT (factor is the step for rho)");
  cmd->add_option("--quad", f.quad, "POLAR,AZIMUTH,RADIAL quadrature orders");
  cmd->add_option("--backend", f.backend, "analytic|fd2|fd4");
  cmd->add_option("--format", f.format, "json|csv|both");
  cmd->add_option("--functional", f.functionals, "functional to evaluate (repeatable)");
  cmd->add_option("--index", f.index, "component index (alpha or a)");
  cmd->add_option("--workers", f.workers, "quadrature threads (0 = all cores)");
}

// Config file first, then flags on top.
RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot read config '" + f.config + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = parse_config(ss.str());
  }
  if (!f.metric.empty()) cfg.metric.name = f.metric;
  if (f.n != 0) cfg.metric.n = f.n;
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects KEY=VAL, got '" + kv + "'");
    try {
      std::size_t used = 0;
      const std::string val = kv.substr(eq + 1);
      cfg.metric.params[kv.substr(0, eq)] = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw ConfigError("--param value in '" + kv + "' is not a number");
    }
  }
  if (!f.radii.empty()) {
    const auto v = parse_triple(f.radii, "--radii");
    cfg.radii = RadiiLadder{v[0], v[1], as_count(v[2], "radii count")};
  }
  if (!f.quad.empty()) {
    const auto v = parse_triple(f.quad, "--quad");
    cfg.quad = QuadratureRule{as_count(v[0], "polar order"), as_count(v[1], "azimuth order"),
                              as_count(v[2], "radial order")};
  }
  if (!f.backend.empty()) cfg.backend = backend_from_string(f.backend);
  if (!f.format.empty()) cfg.format = format_from_string(f.format);
  if (!f.functionals.empty()) cfg.functionals = f.functionals;
  if (f.index >= 0) cfg.index = f.index;
  if (!f.out.empty()) cfg.out = f.out;
  if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
  if (f.workers >= 0) cfg.workers = f.workers;
  if (cfg.metric.name.empty()) throw ConfigError("no metric given (use --metric or a config)");
  return cfg;
}

// Builds the entry and applies the load-time admission check.
CatalogMetric load_metric(const RunConfig& cfg) {
  CatalogMetric cm = catalog_build(cfg.metric);
  DecayOptions opt;
  opt.inner_radius = cm.inner_radius;
  const DecayReport d = decay_report(cm.physical, cm.model, cm.decay_tau, opt);
  if (!d.admit) throw AdmissionError(cm.name + " is not admissible: " + d.reason);
  return cm;
}

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string csv_path(const std::string& out, const MassReport& r) {
  std::filesystem::path p(out);
  std::string stem = p.stem().string() + "_" + r.functional;
  if (r.component >= 0) stem += "_" + std::to_string(r.component);
  return (p.parent_path() / (stem + ".csv")).string();
}

void emit(const std::string& json_text, const std::vector<MassReport>& reports,
          const RunConfig& cfg, std::ostream& out) {
  const bool want_json = cfg.format != OutputFormat::csv;
  const bool want_csv = cfg.format != OutputFormat::json;
  if (want_json) {
    if (cfg.out.empty()) out << json_text << '\n';
    else write_text(cfg.out, json_text + "\n");
  }
  if (want_csv) {
    for (const auto& r : reports) {
      if (cfg.out.empty()) {
        out << "# " << r.functional;
        if (r.component >= 0) out << ' ' << r.component;
        out << '\n' << report_csv(r);
      } else {
        write_text(csv_path(cfg.out, r), report_csv(r));
      }
    }
  }
}

std::vector<Functional> requested(const RunConfig& cfg, std::vector<Functional> defaults,
                                  std::initializer_list<Functional> allowed,
                                  const char* command) {
  if (cfg.functionals.empty()) return defaults;
  std::vector<Functional> out;
  for (const auto& name : cfg.functionals) {
    const Functional f = functional_from_string(name);
    bool ok = false;
    for (Functional a : allowed) ok = ok || a == f;
    if (!ok) throw ConfigError(name + " is not available in '" + command + "'");
    out.push_back(f);
  }
  return out;
}

int run_functionals(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  const CatalogMetric cm = load_metric(cfg);
  const int n = cm.n;
  std::vector<Functional> fns;
  std::vector<int> indices;
  if (command == "mass") {
    if (cm.model != Model::flat)
      throw ConfigError(cm.name + " is asymptotically hyperbolic; use 'hypmass'");
    fns = requested(cfg, {Functional::mass_adm, Functional::mass_geometric},
                    {Functional::mass_adm, Functional::mass_geometric, Functional::mass_bulk},
                    "mass");
    indices = {0};
  } else if (command == "center") {
    if (cm.model != Model::flat)
      throw ConfigError(cm.name + " is asymptotically hyperbolic; centers need a flat metric");
    fns = requested(cfg, {Functional::center_adm, Functional::center_geometric},
                    {Functional::center_adm, Functional::center_geometric}, "center");
    if (cfg.index) {
      if (*cfg.index < 1 || *cfg.index > n - 1) throw ConfigError("--index must lie in 1..n-1");
      indices = {*cfg.index};
    } else {
      for (int a = 1; a < n; ++a) indices.push_back(a);
    }
  } else {
    if (cm.model != Model::hyperbolic)
      throw ConfigError(cm.name + " is asymptotically flat; use 'mass'");
    fns = requested(cfg, {Functional::hyp_charge, Functional::hyp_geometric},
                    {Functional::hyp_charge, Functional::hyp_geometric}, "hypmass");
    if (cfg.index) {
      if (*cfg.index < 0 || *cfg.index > n - 1) throw ConfigError("--index must lie in 0..n-1");
      indices = {*cfg.index};
    } else {
      for (int a = 0; a < n; ++a) indices.push_back(a);
    }
  }

  const Backend backend{cfg.backend};
  InvariantRequest req(cm.physical.with_backend(backend), cm.reference.with_backend(backend),
                       cm.model, cm.decay_tau);
  if (cfg.radii) req.ladder = *cfg.radii;
  if (cfg.quad) req.rule = *cfg.quad;
  req.parallel.workers = cfg.workers;
  req.ladder.radii(cm.model);  // validates before any work

  ReportContext ctx{cm.name, n, cm.params, req.rule, cfg.backend, req.ladder, cfg.seed};
  std::vector<MassReport> reports;
  if (command == "center") req.mass = mass_adm(req).limit();
  for (Functional f : fns)
    for (int idx : indices) reports.push_back(evaluate(req, f, idx));

  std::string text = "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i)
    text += report_json(reports[i], ctx) + (i + 1 < reports.size() ? ",\n" : "\n");
  text += "]";
  emit(json::parse(text).dump(2), reports, cfg, out);

  for (const auto& r : reports)
    if (r.flagged()) {
      std::ostringstream os;
      os << r.functional;
      if (r.component >= 0) os << '[' << r.component << ']';
      os << " did not converge cleanly: "
         << (r.fit.warnings.empty() ? std::string("flagged") : r.fit.warnings.front());
      throw EvaluationError(os.str());
    }
  return 0;
}

int run_identities(const RunConfig& cfg, std::ostream& out) {
  const CatalogMetric cm = load_metric(cfg);
  const int n = cm.n;
  json doc;
  doc["metric"] = cm.name;
  doc["n"] = n;
  doc["params"] = cm.params;
  doc["seed"] = cfg.seed;
  doc["version"] = version_string();
  doc["conventions"] = {{"second_fundamental_form", std::string(describe(kSecondFormConvention))},
                        {"static_operator", "hess w - (tr hess w) g - w Ric"}};
  bool pass = true;
  json reports = json::array();

  const auto analytic = pohozaev_check(n, 100, cfg.seed, Backend::analytic(), 1e-8);
  const auto fd4 = pohozaev_check(n, 100, cfg.seed, Backend::fd4(), 1e-5);
  reports.push_back(residual_json(analytic));
  reports.back()["backend"] = "analytic";
  reports.push_back(residual_json(fd4));
  reports.back()["backend"] = "fd4";
  pass = pass && analytic.pass && fd4.pass;

  const OrderEstimate order = pohozaev_order(n, 20, cfg.seed, BackendKind::fd4, {0.04, 0.02, 0.01});
  const bool order_ok = std::abs(order.order - 4.0) <= 0.5;
  doc["pohozaev_order"] = {{"steps", order.steps},   {"residuals", order.residuals},
                           {"orders", order.orders}, {"order", order.order},
                           {"expected", 4.0},        {"pass", order_ok}};
  pass = pass && order_ok;

  const double r0 = cm.model == Model::flat ? std::max(8.0, 2.0 * cm.inner_radius)
                                            : std::max(chart_radius(3.0), 2.0 * cm.inner_radius);
  const auto pts = boundary_points(n, 50, r0, 2.0 * r0, cfg.seed);
  const auto codazzi = codazzi_check(cm.physical, pts, 1e-5);
  reports.push_back(residual_json(codazzi));
  pass = pass && codazzi.pass;

  // Statics at the same boundary points and at interior points.
  Rng rng(cfg.seed);
  std::vector<Point> spts = pts;
  for (int i = 0; i < 50; ++i) {
    Point p = random_point(n, r0, rng);
    p(n - 1) = std::abs(p(n - 1));
    spts.push_back(p);
  }
  const auto statics = static_check(cm.model, n, spts, cm.model == Model::flat ? 1e-12 : 1e-8);
  reports.push_back(residual_json(statics));
  pass = pass && statics.pass;

  doc["reports"] = reports;
  doc["pass"] = pass;
  RunConfig c = cfg;
  c.format = OutputFormat::json;
  emit(doc.dump(2), {}, c, out);
  if (!pass) throw EvaluationError("an identity check exceeded its tolerance");
  return 0;
}

int run_decay(const RunConfig& cfg, std::ostream& out) {
  const CatalogMetric cm = catalog_build(cfg.metric, false);
  DecayOptions opt;
  opt.inner_radius = cm.inner_radius;
  opt.seed = cfg.seed;
  const DecayReport d = decay_report(cm.physical, cm.model, cm.decay_tau, opt);
  json doc = decay_json(d);
  doc["metric"] = cm.name;
  doc["params"] = cm.params;
  doc["seed"] = cfg.seed;
  doc["version"] = version_string();
  RunConfig c = cfg;
  c.format = OutputFormat::json;
  emit(doc.dump(2), {}, c, out);
  if (!d.admit) throw AdmissionError(cm.name + " is not admissible: " + d.reason);
  return 0;
}

int run_catalog_list(std::ostream& out) {
  json list = json::array();
  for (const auto& e : catalog_entries())
    list.push_back({{"name", e.name},
                    {"model", std::string(to_string(e.model))},
                    {"defaults", e.defaults},
                    {"description", e.description}});
  out << list.dump(2) << '\n';
  return 0;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mass and center of mass of asymptotically flat and hyperbolic manifolds with "
               "noncompact boundary"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);
  Flags flags;
  auto* mass = app.add_subcommand("mass", "mass functionals of an asymptotically flat metric");
  auto* center = app.add_subcommand("center", "center of mass components");
  auto* hypmass = app.add_subcommand("hypmass", "mass functional of an asymptotically hyperbolic metric");
  auto* identities = app.add_subcommand("identities", "pointwise identity checks");
  auto* decay = app.add_subcommand("decay", "fitted decay rates and admission");
  auto* catalog = app.add_subcommand("catalog", "metric catalog");
  auto* list = catalog->add_subcommand("list", "list catalog entries");
  catalog->require_subcommand(1);
  for (auto* cmd : {mass, center, hypmass}) add_common(cmd, flags, true);
  for (auto* cmd : {identities, decay}) add_common(cmd, flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    if (list->parsed()) return run_catalog_list(out);
    const RunConfig cfg = resolve(flags);
    if (mass->parsed()) return run_functionals("mass", cfg, out);
    if (center->parsed()) return run_functionals("center", cfg, out);
    if (hypmass->parsed()) return run_functionals("hypmass", cfg, out);
    if (identities->parsed()) return run_identities(cfg, out);
    if (decay->parsed()) return run_decay(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const DegenerateMassError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 1;
  }
  return 2;
}

}  // namespace asymass
