#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "phaseret/factorization.hpp"
#include "phaseret/hilbert.hpp"
#include "phaseret/runner.hpp"
#include "phaseret/sampling.hpp"

namespace py = pybind11;
using namespace phaseret;

namespace {

RealSamples rim_samples(std::vector<double> values) {
    RealSamples s;
    s.grid = make_circle_grid(values.size(), 1.0);
    s.values = std::move(values);
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "modulus-only retrieval on the unit disc (native core)";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_RuntimeError);

    m.def(
        "hilbert_on_nodes",
        [](std::vector<double> values) { return hilbert_on_nodes(rim_samples(std::move(values))).values; },
        py::arg("values"), "circular Hilbert transform evaluated back on the uniform nodes");

    m.def(
        "hilbert_offgrid",
        [](std::vector<double> values, double t) { return hilbert_offgrid(rim_samples(std::move(values)), t); },
        py::arg("values"), py::arg("t"), "circular Hilbert transform at an arbitrary angle");

    m.def(
        "outer_phase",
        [](std::vector<double> modulus) { return OuterFactor(rim_samples(std::move(modulus))).phase(); },
        py::arg("modulus"), "boundary phase of the outer factor with the given boundary modulus");

    m.def(
        "blaschke_eval",
        [](int m_, std::vector<cplx> zeros, cplx z) {
            BlaschkeProduct b;
            b.m = m_;
            b.zeros = std::move(zeros);
            return blaschke_eval(b, z);
        },
        py::arg("m"), py::arg("zeros"), py::arg("z"));

    m.def("match_zero_sets", &match_zero_sets, py::arg("a"), py::arg("b"),
          "optimal-assignment distances between two equally sized zero lists");

    m.def(
        "retrieve_json",
        [](const std::string& config_json) {
            RunConfig cfg = config_from_json(nlohmann::json::parse(config_json));
            RunOutput out = run(cfg);
            nlohmann::json j;
            j["report"] = report_to_json(out.report);
            if (out.has_truth) j["comparison"] = compare_to_json(compare_report(out.report, out.truth));
            return j.dump();
        },
        py::arg("config_json"),
        "full retrieval run from a JSON config string; returns report (+ comparison) as JSON");
}
