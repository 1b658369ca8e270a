#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rdga/errors.hpp"
#include "rdga/ncdga.hpp"
#include "rdga/polynomial.hpp"
#include "rdga/suites.hpp"

namespace py = pybind11;
using namespace rdga;

namespace {

SuiteConfig make_config(std::uint64_t seed, int samples, std::optional<double> tolerance, const std::string& lambda,
                        int cap) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.tolerance = tolerance;
    try {
        cfg.lambda = parse_rational(lambda);
    } catch (const std::invalid_argument&) {
        throw UsageError("lambda expects a rational such as 1, -2, 1/2 or 0.25, got '" + lambda + "'");
    }
    cfg.cap = cap;
    return cfg;
}

// every report function shares the same keyword arguments
template <class F>
void def_report(py::module_& m, const char* name, F f, const char* doc) {
    m.def(
        name,
        [f](const Geometry& g, std::uint64_t seed, int samples, std::optional<double> tolerance,
            const std::string& lambda, int cap) {
            SuiteConfig cfg = make_config(seed, samples, tolerance, lambda, cap);
            py::gil_scoped_release release;
            return f(g, cfg);
        },
        py::arg("geometry"), py::kw_only(), py::arg("seed") = 1, py::arg("samples") = 100,
        py::arg("tolerance") = py::none(), py::arg("lambda_") = "1", py::arg("cap") = kDefaultNcCap, doc);
}

}  // namespace

PYBIND11_MODULE(_rdga, m) {
    m.doc() = "Identity checks and quantization of Riemannian geometry as a deformed differential graded algebra";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<UsageError>(m, "UsageError", error);
    py::register_exception<InvalidMetric>(m, "InvalidMetric", error);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("id", &CheckResult::id)
        .def_readonly("samples", &CheckResult::samples)
        .def_readonly("max_residual", &CheckResult::max_residual)
        .def_readonly("passed", &CheckResult::pass)
        .def_readonly("seed", &CheckResult::seed)
        .def_readonly("note", &CheckResult::note)
        .def("__repr__", [](const CheckResult& c) {
            return "<CheckResult " + c.id + (c.pass ? " PASS>" : " FAIL>");
        });

    py::class_<Report>(m, "Report")
        .def_readonly("suite", &Report::suite)
        .def_readonly("checks", &Report::checks)
        .def_readonly("environment", &Report::environment)
        .def_readonly("tables", &Report::tables)
        .def("all_pass", &Report::all_pass)
        .def("text", &Report::text)
        .def("json", &Report::json)
        .def("__str__", &Report::text);

    py::class_<Geometry>(m, "Geometry")
        .def_property_readonly("name", [](const Geometry& g) { return g.def.name; })
        .def_property_readonly("coords", [](const Geometry& g) { return g.def.coords; })
        .def_property_readonly("jet", &Geometry::jet)
        .def_property_readonly("conformal", [](const Geometry& g) { return g.conformal.has_value(); })
        .def_property_readonly("text", [](const Geometry& g) { return geometry_text(g.def); })
        .def("__repr__", [](const Geometry& g) { return "<Geometry " + g.def.name + ">"; });

    m.def("load_geometry", &load_geometry, py::arg("name_or_path"), py::arg("order") = 0,
          "built-in name or path to a geometry file");
    m.def(
        "parse_geometry", [](const std::string& text, int order) { return build_geometry(parse_geometry(text), order); },
        py::arg("text"), py::arg("order") = 0, "geometry from the text of a geometry file");
    m.def("builtin_geometry_names", &builtin_geometry_names);

    m.def(
        "verify",
        [](const Geometry& g, const std::string& suite, std::uint64_t seed, int samples,
           std::optional<double> tolerance, const std::string& lambda, int cap) {
            SuiteConfig cfg = make_config(seed, samples, tolerance, lambda, cap);
            py::gil_scoped_release release;
            return verify(g, suite, cfg);
        },
        py::arg("geometry"), py::arg("suite") = "all", py::kw_only(), py::arg("seed") = 1, py::arg("samples") = 100,
        py::arg("tolerance") = py::none(), py::arg("lambda_") = "1", py::arg("cap") = kDefaultNcCap,
        "suite: riemann | extension | timext | all");
    def_report(m, "ricci_report", &ricci_report, "Ricci via -1/2 Δ(g) against the Christoffel oracle");
    def_report(m, "quantize_report", &quantize_report, "relation tables of the quantized calculus");
    def_report(m, "spacetime_report", &spacetime_report, "quantized spacetime; needs conformal data");

    m.def(
        "z2_report",
        [](int cap) {
            py::gil_scoped_release release;
            return z2_report(PerpTable::standard_table(), cap);
        },
        py::arg("cap") = kDefaultNcCap, "the two-point example");
}
