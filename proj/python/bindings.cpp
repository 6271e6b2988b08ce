// Copyright 2026 The mptrotter Authors
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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpt/convergence.hpp"
#include "mpt/experiments.hpp"
#include "mpt/hamiltonian.hpp"
#include "mpt/lcu.hpp"
#include "mpt/linalg.hpp"
#include "mpt/multiproduct.hpp"
#include "mpt/trotter.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace mpt {
namespace {

SweepConfig config_from(const std::optional<std::string>& json) {
  return json ? parse_config(*json) : SweepConfig::default_experiment();
}

py::dict row_to_dict(const SweepRow& row) {
  py::dict d("t"_a = row.t, "algo"_a = row.algo,
             "success_prob"_a = row.success_probability, "degenerate"_a = row.degenerate);
  if (row.degenerate) {
    d["populations"] = py::none();
    d["state_error"] = py::none();
    d["fidelity"] = py::none();
  } else {
    d["populations"] = row.populations;
    d["state_error"] = row.state_error;
    d["fidelity"] = row.classical_fidelity;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-product Trotterization with LCU and oblivious amplitude amplification";

  m.def("spectral_norm", &spectral_norm, "m"_a);
  m.def("hermitian_propagator", &hermitian_propagator, "h"_a, "t"_a,
        "exp(-i h t) for Hermitian h.");
  m.def("is_unitary", &is_unitary, "m"_a, "tol"_a = kSpectralTol);

  py::class_<SpinModelParams>(m, "SpinModelParams")
      .def(py::init<>())
      .def(py::init([](double omega, double delta, double e1, double e2) {
             return SpinModelParams{omega, delta, e1, e2};
           }),
           "omega"_a = 0.2, "delta"_a = 0.5, "e1"_a = 0.3, "e2"_a = 0.7)
      .def_readwrite("omega", &SpinModelParams::omega)
      .def_readwrite("delta", &SpinModelParams::delta)
      .def_readwrite("e1", &SpinModelParams::e1)
      .def_readwrite("e2", &SpinModelParams::e2);

  py::class_<HamiltonianDecomposition>(m, "HamiltonianDecomposition")
      .def(py::init<std::vector<Operator>>(), "terms"_a)
      .def_property_readonly("terms", &HamiltonianDecomposition::terms)
      .def_property_readonly("dim", &HamiltonianDecomposition::dim)
      .def("__len__", &HamiltonianDecomposition::size)
      .def("total", [](const HamiltonianDecomposition& d) { return total(d); });

  m.def("build_spin_hamiltonian", &build_spin_hamiltonian, "params"_a = SpinModelParams{});
  m.def("trotterize",
        py::overload_cast<const HamiltonianDecomposition&, double, std::int64_t>(&trotterize),
        "decomp"_a, "t"_a, "l"_a);

  m.def("mp_coefficients",
        [](const std::vector<std::int64_t>& l) { return mp_coefficients(l); }, "iterations"_a);

  py::class_<MpSchedule>(m, "MpSchedule")
      .def_static("modified", &MpSchedule::modified, "a"_a, "k"_a)
      .def_static("original", &MpSchedule::original, "gamma"_a, "k"_a)
      .def_static("explicit", &MpSchedule::explicit_list, "iterations"_a)
      .def_static("parse", &parse_schedule, "text"_a)
      .def_property_readonly("iterations", &MpSchedule::iterations)
      .def_property_readonly("coefficients", &MpSchedule::coefficients)
      .def_property_readonly("abs_sum", &MpSchedule::abs_sum)
      .def_property_readonly("lcu_probability", &MpSchedule::lcu_probability)
      .def("__len__", &MpSchedule::k)
      .def("__repr__", &MpSchedule::describe);

  m.def("depth_matched_schedule", &depth_matched_schedule, "gamma"_a, "k"_a);
  m.def("mp_operator", &mp_operator, "decomp"_a, "t"_a, "schedule"_a);

  py::class_<ErrorReport>(m, "ErrorReport")
      .def_readonly("t", &ErrorReport::t)
      .def_readonly("state_error", &ErrorReport::state_error)
      .def_readonly("operator_error", &ErrorReport::operator_error)
      .def_readonly("nonunitarity", &ErrorReport::nonunitarity)
      .def_readonly("degenerate", &ErrorReport::degenerate);
  m.def("error_report", &error_report, "decomp"_a, "t"_a, "m"_a, "psi0"_a);

  py::enum_<Precision>(m, "Precision")
      .value("DOUBLE", Precision::kDouble)
      .value("QUAD", Precision::kQuad);
  m.def(
      "error_curve",
      [](const HamiltonianDecomposition& d, const StateVector& psi, const MpSchedule& s,
         const std::vector<double>& times, Precision p) {
        return error_curve(d, psi, s, times, p);
      },
      "decomp"_a, "psi0"_a, "schedule"_a, "times"_a, "precision"_a = Precision::kQuad);

  py::class_<AmplitudeSplit>(m, "AmplitudeSplit")
      .def(py::init<StateVector, StateVector>(), "m"_a, "m_prime"_a)
      .def_readonly("m", &AmplitudeSplit::m)
      .def_readonly("m_prime", &AmplitudeSplit::m_prime);
  m.def("optimal_split",
        [](const std::vector<double>& c) { return optimal_split(c); }, "coefficients"_a);

  py::class_<LcuCircuit>(m, "LcuCircuit")
      .def_property_readonly("k", &LcuCircuit::k)
      .def_property_readonly("ancilla_dim", &LcuCircuit::ancilla_dim)
      .def_property_readonly("data_dim", &LcuCircuit::data_dim)
      .def_property_readonly("w", &LcuCircuit::w)
      .def_property_readonly("c", &LcuCircuit::c)
      .def_property_readonly("c_prime", &LcuCircuit::c_prime)
      .def("target_operator", &LcuCircuit::target_operator)
      .def("projected_block", &LcuCircuit::projected_block);
  m.def("build_lcu", &build_lcu, "coefficients"_a, "branch_ops"_a,
        "split"_a = std::optional<AmplitudeSplit>{});

  py::class_<LcuOutcome>(m, "LcuOutcome")
      .def_readonly("projected_state", &LcuOutcome::projected_state)
      .def_readonly("success_probability", &LcuOutcome::success_probability)
      .def_readonly("renormalized_state", &LcuOutcome::renormalized_state)
      .def_readonly("degenerate", &LcuOutcome::degenerate);
  m.def("apply_lcu", &apply_lcu, "circuit"_a, "psi"_a);

  py::enum_<OaaSign>(m, "OaaSign")
      .value("STANDARD", OaaSign::kStandard)
      .value("SIMPLIFIED", OaaSign::kSimplified);
  m.def("apply_oaa", &apply_oaa, "circuit"_a, "psi"_a, "iterations"_a = 1,
        "sign"_a = OaaSign::kStandard);
  m.def("predicted_probability", &predicted_probability, "p"_a, "iterations"_a);

  py::class_<OaaErrorReport>(m, "OaaErrorReport")
      .def_readonly("s", &OaaErrorReport::s)
      .def_readonly("amplitude_offset", &OaaErrorReport::amplitude_offset)
      .def_readonly("delta", &OaaErrorReport::delta)
      .def_readonly("bound", &OaaErrorReport::bound)
      .def_readonly("identity_residual", &OaaErrorReport::identity_residual)
      .def_readonly("observed_error", &OaaErrorReport::observed_error);
  m.def("oaa_error_report", &oaa_error_report, "circuit"_a, "psi"_a);

  m.def(
      "classical_fidelity",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return classical_fidelity(p, q);
      },
      "p"_a, "q"_a);
  m.def(
      "fit_order",
      [](const std::vector<double>& t, const std::vector<double>& e) { return fit_order(t, e); },
      "t"_a, "errors"_a);
  m.def(
      "run_sweep",
      [](const std::optional<std::string>& config) {
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_sweep(config_from(config));
        }
        py::list out;
        for (const SweepRow& row : rows) out.append(row_to_dict(row));
        return out;
      },
      "config_json"_a = py::none(), "Rows of the configured sweep; None runs the default experiment.");
  m.def(
      "sweep_text",
      [](const std::optional<std::string>& config, const std::string& format) {
        const OutputFormat f = parse_format(format);
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          emit(run_sweep(config_from(config)), f, out);
        }
        return out.str();
      },
      "config_json"_a = py::none(), "format"_a = "csv");
}

}  // namespace mpt
