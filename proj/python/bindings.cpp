// Copyright 2026 The stabkit authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stabkit/bootstrap.hpp"
#include "stabkit/clifford.hpp"
#include "stabkit/dataset.hpp"
#include "stabkit/dense.hpp"
#include "stabkit/parallel.hpp"
#include "stabkit/prob.hpp"
#include "stabkit/validate.hpp"
#include "stabkit/version.hpp"

namespace py = pybind11;
using namespace stabkit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clifford-restricted circuit sampling and the stabilizer bootstrap";
  m.attr("__version__") = std::string(kVersion);

  m.def("set_threads", &par::set_thread_count, py::arg("n"),
        "Worker thread cap (0 restores the hardware default). Results never depend on it.");

  py::class_<PauliString>(m, "PauliString")
      .def_static("from_letters", &PauliString::from_letters, py::arg("letters"),
                  py::arg("sign") = 1)
      .def_static("parse", &PauliString::parse, py::arg("text"))
      .def_static("domain_wall", &PauliString::domain_wall, py::arg("n"), py::arg("r"))
      .def_property_readonly("num_qubits", &PauliString::num_qubits)
      .def_property_readonly("phase_exp", &PauliString::phase_exp)
      .def("weight", &PauliString::weight)
      .def("is_hermitian", &PauliString::is_hermitian)
      .def("sign", &PauliString::sign)
      .def("__str__", &PauliString::str)
      .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; })
      .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; });

  m.def("commutes", &commutes, py::arg("p"), py::arg("q"));
  m.def("multiply", &multiply, py::arg("p"), py::arg("q"));

  py::enum_<GateKind>(m, "GateKind")
      .value("RY_QUARTER", GateKind::kRyQuarter)
      .value("CNOT", GateKind::kCnot)
      .value("H", GateKind::kH)
      .value("S", GateKind::kS)
      .value("X", GateKind::kX)
      .value("Z", GateKind::kZ);

  py::class_<Gate>(m, "Gate")
      .def_static("ry_quarter", &Gate::ry_quarter, py::arg("qubit"), py::arg("k"))
      .def_static("cnot", &Gate::cnot, py::arg("control"), py::arg("target"))
      .def_static("h", &Gate::h, py::arg("qubit"))
      .def_static("s", &Gate::s, py::arg("qubit"))
      .def_static("x", &Gate::x, py::arg("qubit"))
      .def_static("z", &Gate::z, py::arg("qubit"))
      .def_readonly("kind", &Gate::kind)
      .def_readonly("a", &Gate::a)
      .def_readonly("b", &Gate::b);

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_property_readonly("num_qubits", &Circuit::num_qubits)
      .def("append", py::overload_cast<const Gate &>(&Circuit::append), py::arg("gate"))
      .def("__len__", &Circuit::size)
      .def("dump", [](const Circuit &c) { return dump_circuit(c); });

  m.def("conjugate_gate", &conjugate_gate, py::arg("p"), py::arg("g"));
  m.def("expectation_heisenberg",
        py::overload_cast<const Circuit &, const PauliString &>(&expectation_heisenberg),
        py::arg("circuit"), py::arg("observable"));

  py::class_<StabilizerTableau>(m, "StabilizerTableau")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_property_readonly("num_qubits", &StabilizerTableau::num_qubits)
      .def("apply_gate", &StabilizerTableau::apply_gate, py::arg("gate"))
      .def("apply_circuit", &StabilizerTableau::apply_circuit, py::arg("circuit"))
      .def("is_valid", &StabilizerTableau::is_valid)
      .def("rows", &StabilizerTableau::rows);

  m.def("tableau_from_circuit", &tableau_from_circuit, py::arg("circuit"));
  m.def("expectation_tableau", &expectation_tableau, py::arg("tableau"), py::arg("observable"));

  py::class_<StateVector>(m, "StateVector")
      .def_readonly("n", &StateVector::n)
      .def_readonly("amps", &StateVector::amps)
      .def("norm", &StateVector::norm);
  m.def("simulate_dense", &simulate_dense, py::arg("circuit"));
  m.def("expectation_dense", &expectation_dense, py::arg("state"), py::arg("observable"));

  py::enum_<Entanglement>(m, "Entanglement")
      .value("LINEAR", Entanglement::kLinear)
      .value("REVERSE_LINEAR", Entanglement::kReverseLinear);

  py::enum_<ChainVariant>(m, "ChainVariant")
      .value("FROZEN", ChainVariant::kFrozen)
      .value("SWAPPED", ChainVariant::kSwapped)
      .value("MIRRORED", ChainVariant::kMirrored)
      .value("SWAPPED_MIRRORED", ChainVariant::kSwappedMirrored);

  py::class_<AnsatzSpec>(m, "AnsatzSpec")
      .def(py::init([](std::size_t n, std::size_t layers, Entanglement ent) {
             return AnsatzSpec{n, layers, ent};
           }),
           py::arg("n_qubits"), py::arg("n_layers") = 1,
           py::arg("ent") = Entanglement::kReverseLinear)
      .def_readwrite("n_qubits", &AnsatzSpec::n_qubits)
      .def_readwrite("n_layers", &AnsatzSpec::n_layers)
      .def_readwrite("ent", &AnsatzSpec::ent)
      .def("__repr__", [](const AnsatzSpec &s) { return ansatz_descriptor(s); });

  m.def("angle_count", &angle_count, py::arg("spec"));
  m.def("build_ansatz_circuit", &build_ansatz_circuit, py::arg("spec"), py::arg("angles"),
        py::arg("variant") = ChainVariant::kFrozen);
  m.def(
      "encode_features",
      [](const std::vector<std::uint8_t> &levels) {
        return encode_features(std::span<const std::uint8_t>(levels.data(), levels.size()));
      },
      py::arg("levels"));
  m.def("compose", &compose, py::arg("encoding"), py::arg("ansatz"));

  py::class_<OutcomeCounts>(m, "OutcomeCounts")
      .def_readonly("total", &OutcomeCounts::total)
      .def_readonly("plus_one", &OutcomeCounts::plus_one)
      .def_readonly("minus_one", &OutcomeCounts::minus_one)
      .def_readonly("zero", &OutcomeCounts::zero)
      .def("p_plus", &OutcomeCounts::p_plus)
      .def("p_minus", &OutcomeCounts::p_minus)
      .def("p_zero", &OutcomeCounts::p_zero);

  py::enum_<ObservableKind>(m, "ObservableKind")
      .value("Z_STRING", ObservableKind::kZString)
      .value("X_STRING", ObservableKind::kXString);

  py::class_<DyadicProbability>(m, "DyadicProbability")
      .def_readonly("log2_den", &DyadicProbability::log2_den)
      .def("value", &DyadicProbability::value);

  m.def("exact_counts", &exact_counts, py::arg("spec"), py::arg("observable"));
  m.def("mc_counts", &mc_counts, py::arg("spec"), py::arg("observable"), py::arg("samples"),
        py::arg("seed"));
  m.def("theory_probability", &theory_probability, py::arg("n"), py::arg("kind"), py::arg("ent"));
  m.def("binomial_stderr", &binomial_stderr, py::arg("p_hat"), py::arg("samples"));

  py::class_<ExponentFit>(m, "ExponentFit")
      .def_readonly("n", &ExponentFit::n)
      .def_readonly("p_hat", &ExponentFit::p_hat)
      .def_readonly("nu", &ExponentFit::nu)
      .def_readonly("stderr", &ExponentFit::std_err)
      .def_readonly("noise_excursion", &ExponentFit::noise_excursion);
  m.def("fit_exponent", py::overload_cast<double, std::size_t>(&fit_exponent), py::arg("p_hat"),
        py::arg("n"));

  py::class_<ScanPoint>(m, "ScanPoint")
      .def_readonly("n", &ScanPoint::n)
      .def_readonly("r", &ScanPoint::r)
      .def_readonly("counts", &ScanPoint::counts)
      .def_readonly("fit", &ScanPoint::fit);
  m.def(
      "scan",
      [](const std::vector<std::size_t> &ns, const std::vector<double> &rs, std::size_t layers,
         Entanglement ent, std::uint64_t samples, std::uint64_t seed) {
        return scan(std::span<const std::size_t>(ns.data(), ns.size()),
                    std::span<const double>(rs.data(), rs.size()), layers, ent, samples, seed);
      },
      py::arg("n_values"), py::arg("r_values"), py::arg("layers"), py::arg("ent"),
      py::arg("samples"), py::arg("seed"));

  py::class_<Dataset>(m, "Dataset")
      .def_property_readonly("n_samples", &Dataset::n_samples)
      .def_property_readonly("n_features", &Dataset::n_features)
      .def("levels", &Dataset::levels)
      .def("labels", [](const Dataset &d) {
        std::vector<int> out(d.labels().begin(), d.labels().end());
        return out;
      });
  m.def("generate_classification", &generate_classification, py::arg("n_samples"),
        py::arg("n_features"), py::arg("class_sep"), py::arg("informative_fraction"),
        py::arg("seed"));
  m.def("mse_loss", &mse_loss, py::arg("angles"), py::arg("spec"), py::arg("observable"),
        py::arg("data"));

  py::class_<ForestParams>(m, "ForestParams")
      .def(py::init<>())
      .def_readwrite("n_trees", &ForestParams::n_trees)
      .def_readwrite("min_leaf", &ForestParams::min_leaf)
      .def_readwrite("feature_subsample_fraction", &ForestParams::feature_subsample_fraction);

  py::class_<BootstrapConfig>(m, "BootstrapConfig")
      .def(py::init<>())
      .def_readwrite("sample_budget", &BootstrapConfig::sample_budget)
      .def_readwrite("opt_iterations", &BootstrapConfig::opt_iterations)
      .def_readwrite("forest", &BootstrapConfig::forest)
      .def_readwrite("pool_size", &BootstrapConfig::pool_size)
      .def_readwrite("mutation_count", &BootstrapConfig::mutation_count)
      .def_readwrite("seed", &BootstrapConfig::seed);

  py::enum_<Phase>(m, "Phase")
      .value("SAMPLE", Phase::kSample)
      .value("OPTIMIZE", Phase::kOptimize);

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("phase", &TraceRecord::phase)
      .def_readonly("iter", &TraceRecord::iter)
      .def_readonly("angles", &TraceRecord::angles)
      .def_readonly("loss", &TraceRecord::loss);

  py::class_<Trace>(m, "Trace")
      .def_readonly("records", &Trace::records)
      .def("best_so_far", &Trace::best_so_far)
      .def("to_jsonl", [](const Trace &t) {
        std::ostringstream out;
        write_trace_jsonl(out, t);
        return out.str();
      });

  py::class_<TraceMetrics>(m, "TraceMetrics")
      .def_readonly("min_loss", &TraceMetrics::min_loss)
      .def_readonly("sample_variance", &TraceMetrics::sample_variance)
      .def_readonly("variance_defined", &TraceMetrics::variance_defined);
  m.def("trace_metrics", &trace_metrics, py::arg("trace"));

  m.def("expected_improvement", &expected_improvement, py::arg("mu"), py::arg("sigma"),
        py::arg("f_best"));

  py::class_<BootstrapResult>(m, "BootstrapResult")
      .def_readonly("trace", &BootstrapResult::trace)
      .def_readonly("best_angles", &BootstrapResult::best_angles)
      .def_readonly("best_loss", &BootstrapResult::best_loss);
  m.def("run_bootstrap", &run_bootstrap, py::arg("config"), py::arg("spec"), py::arg("observable"),
        py::arg("data"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<ValidationStats>(m, "ValidationStats")
      .def_readonly("circuits", &ValidationStats::circuits)
      .def_readonly("path_mismatches", &ValidationStats::path_mismatches)
      .def_readonly("dense_mismatches", &ValidationStats::dense_mismatches)
      .def_readonly("non_integral", &ValidationStats::non_integral)
      .def("ok", &ValidationStats::ok);
  m.def("validate_oracle_agreement", &validate_oracle_agreement, py::arg("n_circuits"),
        py::arg("max_qubits"), py::arg("gates_per_circuit"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
}
