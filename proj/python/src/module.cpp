#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "asymass/catalog/catalog.hpp"
#include "asymass/cli/cli.hpp"
#include "asymass/errors.hpp"
#include "asymass/invariants/invariants.hpp"
#include "asymass/verify/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace asymass;

namespace {

using Params = std::map<std::string, double>;

Point to_point(const std::vector<double>& x, int n) {
  if (static_cast<int>(x.size()) != n) throw DomainError("point has the wrong dimension");
  Point p(n);
  for (int i = 0; i < n; ++i) p(i) = x[i];
  return p;
}

Eigen::MatrixXd dense(const Mat& m) { return m; }

Backend backend_of(const std::string& name) {
  switch (backend_from_string(name)) {
    case BackendKind::fd2: return Backend::fd2();
    case BackendKind::fd4: return Backend::fd4();
    default: return Backend::analytic();
  }
}

std::string evaluate_json(const std::string& name, int n, const Params& params, const std::string& functional,
                          int index, std::optional<std::array<double, 3>> radii,
                          std::optional<std::array<int, 3>> quad, const std::string& backend, int workers) {
  const CatalogMetric cm = catalog_build({name, n, params});
  const Backend be = backend_of(backend);
  InvariantRequest req(cm.physical.with_backend(be), cm.reference.with_backend(be), cm.model, cm.decay_tau);
  if (radii) req.ladder = {(*radii)[0], (*radii)[1], static_cast<int>((*radii)[2])};
  if (quad) req.rule = {(*quad)[0], (*quad)[1], (*quad)[2]};
  req.parallel.workers = workers;
  const MassReport r = evaluate(req, functional_from_string(functional), index);
  ReportContext ctx{cm.name, n, cm.params, req.rule, be.kind, req.ladder, 0};
  return report_json(r, ctx);
}

py::dict extrapolation_dict(const Extrapolation& e) {
  return py::dict("limit"_a = e.limit, "error"_a = e.error, "rate"_a = e.rate, "running"_a = e.running,
                  "warnings"_a = e.warnings, "flagged"_a = e.flagged);
}

}  // namespace

PYBIND11_MODULE(_asymass, m) {
  m.doc() = "Mass and center-of-mass functionals of metrics with a noncompact boundary";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  const auto& config = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<AdmissionError>(m, "AdmissionError", config.ptr());
  py::register_exception<DegenerateMassError>(m, "DegenerateMassError", PyExc_ArithmeticError);

  m.def("version", &version_string);

  m.def("catalog_entries", [] {
    py::list out;
    for (const CatalogInfo& e : catalog_entries())
      out.append(py::dict("name"_a = e.name, "model"_a = e.model == Model::flat ? "flat" : "hyperbolic",
                          "defaults"_a = e.defaults, "description"_a = e.description));
    return out;
  });

  m.def(
      "metric_value",
      [](const std::string& name, int n, const Params& params, const std::vector<double>& x) {
        return dense(catalog_build({name, n, params}).physical.value(to_point(x, n)));
      },
      "name"_a, "n"_a, "params"_a, "point"_a);

  m.def(
      "scalar_curvature",
      [](const std::string& name, int n, const Params& params, const std::vector<double>& x) {
        return curvature(catalog_build({name, n, params}).physical, to_point(x, n)).scalar;
      },
      "name"_a, "n"_a, "params"_a, "point"_a);

  m.def("evaluate_json", &evaluate_json, "name"_a, "n"_a, "params"_a, "functional"_a, "index"_a = 0,
        "radii"_a = py::none(), "quad"_a = py::none(), "backend"_a = "analytic", "workers"_a = 0,
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "extrapolate",
      [](const std::vector<double>& r, const std::vector<double>& v, bool exponential) {
        if (r.size() != v.size()) throw DomainError("radii and values differ in length");
        std::vector<Sample> s;
        for (std::size_t i = 0; i < r.size(); ++i) s.push_back({r[i], v[i]});
        return extrapolation_dict(
            extrapolate(s, exponential ? DecayModel::exponential : DecayModel::power_law));
      },
      "radii"_a, "values"_a, "exponential"_a = false);

  m.def(
      "pohozaev_check",
      [](int n, int count, std::uint64_t seed, const std::string& backend, double tol) {
        const ResidualReport r = pohozaev_check(n, count, seed, backend_of(backend), tol);
        return py::dict("max"_a = r.max, "rms"_a = r.rms, "pass"_a = r.pass, "residuals"_a = r.residuals);
      },
      "n"_a = 3, "count"_a = 100, "seed"_a = 0, "backend"_a = "analytic", "tolerance"_a = 1e-8);

  m.def(
      "decay_fit",
      [](const std::vector<double>& r, const std::vector<double>& v, bool exponential) {
        const DecayFit f = fit_decay(r, v, exponential ? DecayModel::exponential : DecayModel::power_law);
        return py::dict("rate"_a = f.rate, "vanishing"_a = f.vanishing);
      },
      "radii"_a, "values"_a, "exponential"_a = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"asymass"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "args"_a);
}
