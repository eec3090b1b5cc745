// Copyright 2026 The sqzopt Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqzopt/config.hpp"
#include "sqzopt/observables.hpp"
#include "sqzopt/resonance.hpp"
#include "sqzopt/sweep.hpp"

namespace py = pybind11;
using namespace sqzopt;

namespace {

SweepConfig config_from_text(const std::string& text) { return parse_sweep_config(KeyValueConfig::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Steady-state photon transport in a squeezed optomechanical ring pair";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::enum_<Placement>(m, "Placement")
      .value("AreaI", Placement::AreaI)
      .value("AreaII", Placement::AreaII)
      .value("AreaIII", Placement::AreaIII);
  py::enum_<Direction>(m, "Direction").value("Port1", Direction::Port1).value("Port2", Direction::Port2);
  py::enum_<SolverMethod>(m, "SolverMethod")
      .value("direct", SolverMethod::direct)
      .value("iterative", SolverMethod::iterative)
      .value("automatic", SolverMethod::automatic);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("g0", &SystemParams::g0)
      .def_readwrite("J0", &SystemParams::J0)
      .def_readwrite("beta", &SystemParams::beta)
      .def_readwrite("delta_sa", &SystemParams::delta_sa)
      .def_readwrite("delta_sb", &SystemParams::delta_sb)
      .def_readwrite("delta", &SystemParams::delta)
      .def_readwrite("delta_m", &SystemParams::delta_m)
      .def_readwrite("kappa_ex1", &SystemParams::kappa_ex1)
      .def_readwrite("kappa_ex2", &SystemParams::kappa_ex2)
      .def_readwrite("kappa_i", &SystemParams::kappa_i)
      .def_readwrite("gamma_m", &SystemParams::gamma_m)
      .def_readwrite("n_th", &SystemParams::n_th)
      .def_readwrite("eps", &SystemParams::eps)
      .def_readwrite("placement", &SystemParams::placement)
      .def_readwrite("direction", &SystemParams::direction)
      .def_readwrite("full_model", &SystemParams::full_model)
      .def_readwrite("equal_detunings", &SystemParams::equal_detunings)
      .def("validate", &SystemParams::validate);

  py::class_<SqueezedFrame>(m, "SqueezedFrame")
      .def_readonly("r_s", &SqueezedFrame::r_s)
      .def_readonly("g_s", &SqueezedFrame::g_s)
      .def_readonly("J_s", &SqueezedFrame::J_s)
      .def_readonly("delta_bs", &SqueezedFrame::delta_bs)
      .def_readonly("force_F", &SqueezedFrame::force_F);
  m.def("derive_squeezed_frame", &derive_squeezed_frame, py::arg("params"));

  py::class_<Cutoffs>(m, "Cutoffs")
      .def(py::init([](int optical, int phonon, int spectator) { return Cutoffs{optical, phonon, spectator}; }),
           py::arg("optical") = 3, py::arg("phonon") = 8, py::arg("spectator") = -1)
      .def_readwrite("optical", &Cutoffs::optical)
      .def_readwrite("phonon", &Cutoffs::phonon)
      .def_readwrite("spectator", &Cutoffs::spectator);

  m.def(
      "solve",
      [](const SystemParams& p, const Cutoffs& c, SolverMethod method, double tol, bool g2, bool return_rho) {
        SteadyStateOptions o;
        o.method = method;
        o.tol = tol;
        ObservableSet r;
        {
          py::gil_scoped_release release;
          r = solve_observables(p, c, o, g2);
        }
        py::dict d;
        d["T"] = r.T;
        d["T23"] = r.T23;
        d["g2"] = r.g2;
        d["residual"] = r.steady.residual;
        d["iterations"] = r.steady.iterations;
        d["solver"] = to_string(r.steady.solver);
        d["cutoffs"] = r.steady.cutoffs;
        d["wall_time"] = r.steady.wall_time;
        d["min_eigenvalue"] = r.steady.min_eigenvalue;
        if (return_rho) d["rho"] = r.steady.rho;
        return d;
      },
      py::arg("params"), py::arg("cutoffs") = Cutoffs{}, py::arg("method") = SolverMethod::automatic,
      py::arg("tol") = 1e-14, py::arg("g2") = true, py::arg("return_rho") = false,
      "Steady-state transmission T, drop transfer T23 and g2(0) for one direction.");

  m.def("isolation_ratio_db", &isolation_ratio_db, py::arg("T21"), py::arg("T12"));

  m.def("single_photon_matrix", &single_photon_matrix, py::arg("params"), py::arg("frame"), py::arg("squeezed"));
  m.def("single_photon_basis", &single_photon_basis);
  m.def(
      "resonance_roots",
      [](const Eigen::MatrixXd& M0) {
        const ResonanceReport r = resonance_roots(M0);
        return py::make_tuple(r.roots, r.eigenvectors);
      },
      py::arg("M0"), "Roots (ascending) and unit eigenvectors as columns.");
  m.def(
      "eigenstate_components",
      [](const Eigen::MatrixXd& M0, double root) {
        const EigenComponents c = eigenstate_components(M0, root);
        py::dict d;
        d["root"] = c.root;
        d["vector"] = Eigen::VectorXd(c.vector);
        d["ratios"] = c.ratios;
        d["degenerate"] = c.degenerate;
        return d;
      },
      py::arg("M0"), py::arg("root"));
  m.def(
      "two_photon_resonances",
      [](double g) {
        const ResonanceReport r = two_photon_resonances(g);
        return py::make_tuple(r.roots, r.eigenvectors);
      },
      py::arg("g_nu"));

  m.def("parse_grid", &parse_grid, py::arg("text"));
  m.def(
      "sweep_csv",
      [](const std::string& text, int workers) {
        const SweepConfig cfg = config_from_text(text);
        if (cfg.outputs.count(Output::frame)) return frame_csv(frame_table(cfg));
        py::gil_scoped_release release;
        return sweep_csv(run_sweep(cfg, workers > 0 ? workers : worker_count_from_env()));
      },
      py::arg("config_text"), py::arg("workers") = 0, "Run a sweep from config text and return the CSV.");
  m.def(
      "frame_csv", [](const std::string& text) { return frame_csv(frame_table(config_from_text(text))); },
      py::arg("config_text"));
  m.def(
      "appc_csv",
      [](const std::string& text, int workers) {
        const SweepConfig cfg = config_from_text(text);
        py::gil_scoped_release release;
        return appc_csv(validate_detuning_cases(cfg, workers > 0 ? workers : worker_count_from_env()));
      },
      py::arg("config_text"), py::arg("workers") = 0);
}
