// Copyright 2026 The szilard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <string>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "szilard/bounds.hpp"
#include "szilard/engine.hpp"
#include "szilard/error.hpp"
#include "szilard/shots.hpp"
#include "szilard/states.hpp"
#include "szilard/steering.hpp"
#include "szilard/tables.hpp"

namespace py = pybind11;
using namespace szilard;

namespace {

Family family_arg(const std::string &name) {
    const auto f = parse_family(name);
    if (!f) {
        throw Error(ErrorCode::InvalidParam, "unknown family '" + name + "'");
    }
    return *f;
}

Grid grid_arg(std::vector<double> etas, std::vector<double> qs) { return {std::move(etas), std::move(qs)}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Correlated-bath quantum Szilard engine.";

    static py::handle error_type = py::exception<Error>(m, "SzilardError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object exc = error_type(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    // States.
    m.def("gibbs", &gibbs, py::arg("eta"));
    m.def("pure_entangled", &pure_entangled, py::arg("eta"));
    m.def("classical_correlated", &classical_correlated, py::arg("eta"));
    m.def("gibbs_invariant", &gibbs_invariant, py::arg("eta"), py::arg("q"));
    m.def("werner", &werner, py::arg("eta"), py::arg("q"));
    m.def(
        "make_state", [](const std::string &family, double eta, double q) { return make_state(family_arg(family), eta, q); },
        py::arg("family"), py::arg("eta"), py::arg("q") = 1.0);
    m.def("effective_eta", &effective_eta, py::arg("rho"));
    m.def("partial_trace_bath", &partial_trace_bath, py::arg("rho"));
    m.def("bloch_of", &bloch_of, py::arg("rho"));
    m.def("state_of", &state_of, py::arg("v"));

    // Engine.
    py::class_<Strategy>(m, "Strategy")
        .def(py::init<double, double, double>(), py::arg("c1"), py::arg("c2"), py::arg("c3"))
        .def_static("single", &Strategy::single, py::arg("index"))
        .def_static("uniform2", &Strategy::uniform2)
        .def_static("uniform3", &Strategy::uniform3)
        .def_property_readonly("weights", &Strategy::weights)
        .def("__repr__", [](const Strategy &s) {
            const auto &c = s.weights();
            return "Strategy(" + format_number(c[0]) + ", " + format_number(c[1]) + ", " + format_number(c[2]) + ")";
        });

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("index", &Decomposition::index)
        .def_readonly("eta", &Decomposition::eta)
        .def_readonly("alpha", &Decomposition::alpha)
        .def_readonly("bath_plus", &Decomposition::bath_plus)
        .def_readonly("bath_minus", &Decomposition::bath_minus)
        .def_readonly("unitary_plus", &Decomposition::unitary_plus)
        .def_readonly("unitary_minus", &Decomposition::unitary_minus)
        .def_readonly("target_plus", &Decomposition::target_plus)
        .def_readonly("target_minus", &Decomposition::target_minus);
    m.def("make_decomposition", &make_decomposition, py::arg("index"), py::arg("eta"));

    py::class_<Branch>(m, "Branch")
        .def_readonly("probability", &Branch::probability)
        .def_readonly("pre_state", &Branch::pre_state)
        .def_readonly("post_state", &Branch::post_state)
        .def_readonly("work", &Branch::work);
    py::class_<EngineRun>(m, "EngineRun")
        .def_readonly("plus", &EngineRun::plus)
        .def_readonly("minus", &EngineRun::minus)
        .def_readonly("initial_energy", &EngineRun::initial_energy)
        .def_readonly("average_work", &EngineRun::average_work);
    m.def("run_protocol", &run_protocol, py::arg("rho"), py::arg("decomposition"));
    m.def("run_protocol_deferred", &run_protocol_deferred, py::arg("rho"), py::arg("decomposition"));
    m.def("average_work", &average_work, py::arg("rho"), py::arg("strategy"));
    m.def("decomposition_works", &decomposition_works, py::arg("rho"));

    // Bounds.
    m.def(
        "lhs_bound_closed", [](double eta, const Strategy &s) { return lhs_bound_closed({eta, s}); }, py::arg("eta"),
        py::arg("strategy"));
    m.def(
        "closed_bound_is_tight", [](double eta, const Strategy &s) { return closed_bound_is_tight({eta, s}); },
        py::arg("eta"), py::arg("strategy"));
    py::class_<HiddenState>(m, "HiddenState")
        .def_readonly("weight", &HiddenState::weight)
        .def_readonly("direction", &HiddenState::direction);
    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("value", &OracleResult::value)
        .def_property_readonly("support", [](const OracleResult &r) { return r.ensemble.support; })
        .def_readonly("sphere_points", &OracleResult::sphere_points)
        .def_readonly("iterations", &OracleResult::iterations);
    m.def(
        "lhs_bound_oracle",
        [](double eta, const Strategy &s, std::size_t resolution) { return lhs_bound_oracle({eta, s}, resolution); },
        py::arg("eta"), py::arg("strategy"), py::arg("resolution") = 20000, py::call_guard<py::gil_scoped_release>());
    m.def("violation", &violation, py::arg("rho"), py::arg("strategy"));
    m.def(
        "violation_boundary",
        [](const std::string &family, const Strategy &s, double eta) {
            return violation_boundary(family_arg(family), s, eta);
        },
        py::arg("family"), py::arg("strategy"), py::arg("eta"));

    // Steering.
    py::class_<SteeringReport>(m, "SteeringReport")
        .def_readonly("settings", &SteeringReport::settings)
        .def_readonly("value", &SteeringReport::value)
        .def_readonly("bound", &SteeringReport::bound)
        .def_readonly("violation", &SteeringReport::violation)
        .def_readonly("correlators", &SteeringReport::correlators);
    m.def("linear_steering", &linear_steering, py::arg("rho"), py::arg("settings") = 3);
    m.def("spearman", [](const std::vector<double> &x, const std::vector<double> &y) { return spearman(x, y); });
    m.def("linspace", &linspace, py::arg("lo"), py::arg("hi"), py::arg("steps"));

    // Shots.
    py::class_<ShotConfig>(m, "ShotConfig")
        .def(py::init([](std::uint64_t shots, std::uint64_t seed, double fidelity, unsigned workers) {
                 return ShotConfig{shots, seed, fidelity, workers};
             }),
             py::arg("shots") = 10000, py::arg("seed") = 0, py::arg("readout_fidelity") = 1.0, py::arg("workers") = 1)
        .def_readwrite("shots", &ShotConfig::shots_per_setting)
        .def_readwrite("seed", &ShotConfig::rng_seed)
        .def_readwrite("readout_fidelity", &ShotConfig::readout_fidelity)
        .def_readwrite("workers", &ShotConfig::workers);
    py::class_<WorkEstimate>(m, "WorkEstimate")
        .def_readonly("mean", &WorkEstimate::mean)
        .def_readonly("standard_error", &WorkEstimate::standard_error)
        .def_readonly("shots", &WorkEstimate::shots)
        .def_readonly("initial_energy", &WorkEstimate::initial_energy)
        .def_readonly("final_energy", &WorkEstimate::final_energy)
        .def_readonly("final_variance", &WorkEstimate::final_variance);
    m.def("sample_run", &sample_run, py::arg("rho"), py::arg("decomposition"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sample_average_work", &sample_average_work, py::arg("rho"), py::arg("strategy"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    // Tables.
    py::class_<Table>(m, "Table")
        .def_readonly("columns", &Table::columns)
        .def_readonly("rows", &Table::rows)
        .def_readonly("summary", &Table::summary)
        .def("to_csv", &to_csv)
        .def("to_json", &to_json);
    m.def("fig3_table", &fig3_table, py::arg("etas"), py::arg("sampled") = std::nullopt, py::arg("threads") = 1);
    m.def(
        "fig4_map_table",
        [](const std::string &family, const Strategy &s, std::vector<double> etas, std::vector<double> qs,
           unsigned threads) { return fig4_map_table(family_arg(family), s, grid_arg(etas, qs), threads); },
        py::arg("family"), py::arg("strategy"), py::arg("etas"), py::arg("qs"), py::arg("threads") = 1);
    m.def(
        "fig4_boundary_table",
        [](const std::string &family, const Strategy &s, const std::vector<double> &etas, unsigned threads) {
            return fig4_boundary_table(family_arg(family), s, etas, threads);
        },
        py::arg("family"), py::arg("strategy"), py::arg("etas"), py::arg("threads") = 1);
    m.def(
        "scatter_table",
        [](const std::string &family, const Strategy &s, std::vector<double> etas, std::vector<double> qs) {
            return scatter_table(family_arg(family), s, grid_arg(etas, qs));
        },
        py::arg("family"), py::arg("strategy"), py::arg("etas"), py::arg("qs"));
    m.def(
        "bound_table",
        [](double eta, const Strategy &s, std::size_t resolution) { return bound_table({eta, s}, resolution); },
        py::arg("eta"), py::arg("strategy"), py::arg("resolution") = 20000);
    m.def(
        "sweep_table",
        [](const std::string &family, const Strategy &s, std::vector<double> etas, std::vector<double> qs,
           const std::optional<ShotConfig> &sampled, unsigned threads) {
            return sweep_table(family_arg(family), s, grid_arg(etas, qs), sampled, threads);
        },
        py::arg("family"), py::arg("strategy"), py::arg("etas"), py::arg("qs"), py::arg("sampled") = std::nullopt,
        py::arg("threads") = 1);
}
