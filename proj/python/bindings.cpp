#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clustersim/charge_qubit.hpp"
#include "clustersim/cluster_state.hpp"
#include "clustersim/evolution.hpp"
#include "clustersim/experiment.hpp"
#include "clustersim/hamiltonian.hpp"
#include "clustersim/metrics.hpp"
#include "clustersim/tensor_algebra.hpp"

namespace py = pybind11;
using namespace clustersim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Linear cluster-state generation on a charge-qubit chain: "
              "exact factorized evolution, Lindblad T1/T2 noise, fidelity metrics.";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<NumericalError>(m, "NumericalError");
    py::register_exception<IoError>(m, "IoError");

    // tensor algebra
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def(
        "herm_eig",
        [](const ComplexMatrix& a) {
            auto r = herm_eig(a);
            return py::make_tuple(r.values, r.vectors);
        },
        py::arg("a"), "Hermitian eigendecomposition (values ascending, unitary columns).");
    m.def("psd_sqrt", &psd_sqrt, py::arg("a"));
    m.def("expm_oracle", &expm_oracle, py::arg("h"), py::arg("theta"));
    m.def(
        "phase_align",
        [](const StateVector& a, const StateVector& b) {
            auto r = phase_align(a, b);
            return py::make_tuple(r.state, r.phase_defined);
        },
        py::arg("a"), py::arg("b"));

    // charge-qubit chain
    py::class_<QubitParams>(m, "QubitParams")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("charging_energy"),
             py::arg("max_josephson"), py::arg("offset_charge"), py::arg("flux"))
        .def_readwrite("charging_energy", &QubitParams::charging_energy)
        .def_readwrite("max_josephson", &QubitParams::max_josephson)
        .def_readwrite("offset_charge", &QubitParams::offset_charge)
        .def_readwrite("flux", &QubitParams::flux)
        .def("charging_regime", &QubitParams::charging_regime);

    py::class_<ChainParams>(m, "ChainParams")
        .def(py::init<>())
        .def_readwrite("qubits", &ChainParams::qubits)
        .def_readwrite("coupler_inductance", &ChainParams::coupler_inductance)
        .def_readwrite("rate_g", &ChainParams::rate_g)
        .def("__len__", &ChainParams::size);

    m.def("epsilon", &epsilon, py::arg("qubit"));
    m.def("effective_josephson", &effective_josephson, py::arg("qubit"));
    m.def("coupling_strength", &coupling_strength, py::arg("qi"), py::arg("qj"),
          py::arg("l_j"));
    m.def("tune_flux", &tune_flux, py::arg("e_j"), py::arg("l_j"), py::arg("interior"));
    m.def("make_tuned_chain", &make_tuned_chain, py::arg("n"), py::arg("e_c") = 20.0,
          py::arg("e_j") = 1.0, py::arg("l_j") = 1.0);
    m.def("derive_g", &derive_g, py::arg("chain"));

    // hamiltonian
    m.def("projector_site", &projector_site, py::arg("site"), py::arg("n"));
    m.def("build_raw", &build_raw, py::arg("chain"));
    m.def("build_projector_form", &build_projector_form, py::arg("n"), py::arg("g"));
    m.def("equivalence_shift", &equivalence_shift, py::arg("raw"), py::arg("projector_form"),
          py::arg("n"), py::arg("g"));
    m.def("pairwise_commutators", &pairwise_commutators, py::arg("n"));

    // cluster states
    m.def("initial_state", &initial_state, py::arg("n"));
    m.def("cluster_standard", &cluster_standard, py::arg("n"));
    m.def("cluster_product_form", &cluster_product_form, py::arg("n"));
    m.def("hadamard_map", &hadamard_map, py::arg("state"));
    m.def(
        "stabilizer_labels",
        [](std::size_t n) {
            std::vector<std::string> labels;
            for (const auto& g : stabilizer_set(n).generators) labels.push_back(g.label);
            return labels;
        },
        py::arg("n"));
    m.def(
        "verify_stabilizers",
        [](const StateVector& psi, std::size_t n) {
            auto check = verify_stabilizers(psi, stabilizer_set(n));
            return py::make_tuple(check.pass, check.worst_residual, check.worst_label);
        },
        py::arg("state"), py::arg("n"));
    m.def(
        "stabilizer_expectations",
        [](const ComplexMatrix& rho, std::size_t n) {
            return stabilizer_expectations(rho, stabilizer_set(n));
        },
        py::arg("rho"), py::arg("n"));

    // evolution
    py::class_<NoiseModel>(m, "NoiseModel")
        .def(py::init<>())
        .def_readwrite("t1_us", &NoiseModel::t1_us)
        .def_readwrite("t2_us", &NoiseModel::t2_us)
        .def_readwrite("kappa", &NoiseModel::kappa)
        .def_readwrite("enable_relaxation", &NoiseModel::enable_relaxation)
        .def_readwrite("enable_dephasing", &NoiseModel::enable_dephasing)
        .def("gamma1", &NoiseModel::gamma1)
        .def("gamma_phi", &NoiseModel::gamma_phi)
        .def_static("none", &NoiseModel::none)
        .def_static("relaxation_only", &NoiseModel::relaxation_only, py::arg("t1_us"),
                    py::arg("kappa"))
        .def_static("dephasing_only", &NoiseModel::dephasing_only, py::arg("t2_us"),
                    py::arg("kappa"))
        .def_static("combined", &NoiseModel::combined, py::arg("t1_us"), py::arg("t2_us"),
                    py::arg("kappa"));

    m.def("unitary_exact", &unitary_exact, py::arg("n"), py::arg("phase"));
    m.def("evolve_pure", &evolve_pure, py::arg("state"), py::arg("n"), py::arg("phase"));
    m.def("collapse_operators", &collapse_operators, py::arg("noise"), py::arg("n"));
    m.def("lindblad_rhs", &lindblad_rhs, py::arg("rho"), py::arg("h"), py::arg("collapse"));
    m.def(
        "integrate_master",
        [](const ComplexMatrix& rho0, const ComplexMatrix& h,
           const std::vector<ComplexMatrix>& collapse, double t_end, double dt,
           std::size_t sample_every) {
            auto traj = integrate_master(rho0, h, collapse, t_end, dt, sample_every);
            return py::make_tuple(traj.times, traj.states);
        },
        py::arg("rho0"), py::arg("h"), py::arg("collapse"), py::arg("t_end"), py::arg("dt"),
        py::arg("sample_every") = 10);

    // metrics
    m.def("fidelity_pure", &fidelity_pure, py::arg("a"), py::arg("b"));
    m.def("fidelity_mixed", &fidelity_mixed, py::arg("rho"), py::arg("sigma"));
    m.def("l1_coherence", &l1_coherence, py::arg("rho"));
    m.def(
        "find_peaks",
        [](const std::vector<double>& times, const std::vector<double>& values) {
            auto r = find_peaks(times, values);
            return py::make_tuple(r.peak_times, r.peak_values, r.expected_times);
        },
        py::arg("times"), py::arg("values"));

    // experiments
    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("n_qubits", &ExperimentConfig::n_qubits)
        .def_readwrite("g", &ExperimentConfig::g)
        .def_readwrite("t_end", &ExperimentConfig::t_end)
        .def_readwrite("dt", &ExperimentConfig::dt)
        .def_readwrite("sample_every", &ExperimentConfig::sample_every)
        .def_readwrite("t1_us", &ExperimentConfig::t1_us)
        .def_readwrite("t2_us", &ExperimentConfig::t2_us)
        .def_readwrite("kappa", &ExperimentConfig::kappa)
        .def_readwrite("output_dir", &ExperimentConfig::output_dir)
        .def_readwrite("emit_svg", &ExperimentConfig::emit_svg)
        .def_property(
            "scenario",
            [](const ExperimentConfig& c) { return to_string(c.scenario); },
            [](ExperimentConfig& c, const std::string& s) {
                c.scenario = scenario_from_string(s);
            });

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_readonly("scenario", &ScenarioResult::scenario)
        .def_readonly("csv_paths", &ScenarioResult::csv_paths)
        .def_readonly("first_peak_fidelity", &ScenarioResult::first_peak_fidelity)
        .def_readonly("fourth_peak_fidelity", &ScenarioResult::fourth_peak_fidelity)
        .def_readonly("trough_start", &ScenarioResult::trough_start)
        .def_readonly("trough_revival", &ScenarioResult::trough_revival)
        .def_readonly("half_life_combined", &ScenarioResult::half_life_combined)
        .def_readonly("half_life_t1", &ScenarioResult::half_life_t1)
        .def_readonly("partial_output", &ScenarioResult::partial_output)
        .def_readonly("error", &ScenarioResult::error)
        .def_property_readonly("peak_times",
                               [](const ScenarioResult& r) { return r.peaks.peak_times; })
        .def_property_readonly("peak_values",
                               [](const ScenarioResult& r) { return r.peaks.peak_values; });

    m.def("parse_config_file", &parse_config_file, py::arg("path"));
    m.def("run_scenario", &run_scenario, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_all", &run_all, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("calibrate_kappa", &calibrate_kappa, py::arg("target_first_peak"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("combined_first_peak", &combined_first_peak, py::arg("config"), py::arg("kappa"),
          py::call_guard<py::gil_scoped_release>());
}
