// Copyright 2026 The qclink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include <sstream>

#include "qclink/cli.h"
#include "qclink/config.h"
#include "qclink/coupling_shapes.h"
#include "qclink/detectors.h"
#include "qclink/lindblad.h"
#include "qclink/planner.h"

namespace py = pybind11;
using namespace qclink;

namespace {

using BlockMap = std::map<std::pair<int, int>, QuantumOperator>;

std::vector<CouplingOperator> to_couplings(const std::vector<BlockMap> &specs, int n, int d) {
    std::vector<CouplingOperator> out;
    for (const auto &spec : specs) {
        CouplingOperator v(n, d);
        for (const auto &[idx, block] : spec) {
            v.set_block(idx.first, idx.second, block);
        }
        out.push_back(std::move(v));
    }
    return out;
}

py::dict trajectory_dict(const Trajectory &traj) {
    std::vector<double> t, drift, min_eig;
    std::vector<std::vector<double>> p;
    for (const auto &pt : traj) {
        t.push_back(pt.t);
        p.push_back(pt.state.block_traces());
        drift.push_back(pt.trace_drift);
        min_eig.push_back(pt.min_eigenvalue);
    }
    py::dict d;
    d["t"] = t;
    d["p"] = p;
    d["trace_drift"] = drift;
    d["min_eigenvalue"] = min_eig;
    d["final_blocks"] = traj.back().state.blocks();
    return d;
}

py::dict plan_dict(const PlanResult &r) {
    py::dict d;
    d["m"] = r.m;
    d["i_minus"] = r.i_minus;
    d["i_plus"] = r.i_plus;
    d["set"] = py::make_tuple(r.advantageous.lo, r.advantageous.hi);
    d["confidence"] = r.confidence;
    return d;
}

TransmissionScenario make_scenario(double rho1, double eff, double accuracy, std::optional<double> margin, double confidence) {
    TransmissionScenario s;
    s.rho1 = rho1;
    s.eta_det = eff;
    s.accuracy = accuracy;
    s.margin = margin;
    s.confidence_target = confidence;
    s.validate();
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hybrid quantum-classical detector simulator and transmission planner";
    m.attr("__version__") = std::string(version_string());

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<CpConditionError>(m, "CpConditionError", PyExc_ValueError);
    py::register_exception<NumericalGuardError>(m, "NumericalGuardError", PyExc_RuntimeError);

    py::class_<TransmissionScenario>(m, "TransmissionScenario")
        .def(
            py::init(&make_scenario), py::arg("rho1") = 0.8, py::arg("eff") = 0.9, py::arg("accuracy") = 0.05,
            py::arg("margin") = py::none(), py::arg("confidence") = 0.9)
        .def_readwrite("rho1", &TransmissionScenario::rho1)
        .def_readwrite("eff", &TransmissionScenario::eta_det)
        .def_readwrite("accuracy", &TransmissionScenario::accuracy)
        .def_readwrite("margin", &TransmissionScenario::margin)
        .def_readwrite("confidence", &TransmissionScenario::confidence_target)
        .def_property_readonly("effective_margin", &TransmissionScenario::effective_margin)
        .def_property_readonly("success_probability", &TransmissionScenario::success_probability);

    m.def("minimal_m", &minimal_m, py::arg("scenario"));
    m.def("interval_expectations", &interval_expectations, py::arg("m"), py::arg("scenario"));
    m.def(
        "advantageous_set",
        [](int mm, const TransmissionScenario &s) {
            auto r = advantageous_set(mm, s);
            return py::make_tuple(r.lo, r.hi);
        },
        py::arg("m"), py::arg("scenario"), "Inclusive (lo, hi); empty when lo > hi.");
    m.def(
        "confidence",
        [](int mm, double p, long lo, long hi) { return confidence(mm, p, IntegerRange{lo, hi}); }, py::arg("m"),
        py::arg("p"), py::arg("lo"), py::arg("hi"));
    m.def(
        "plan_for", [](int mm, const TransmissionScenario &s) { return plan_dict(plan_for(mm, s)); }, py::arg("m"),
        py::arg("scenario"));
    m.def(
        "scan_plan",
        [](const TransmissionScenario &s, int m_max) {
            auto scan = scan_plan(s, m_max);
            py::list rows;
            for (const auto &r : scan.rows) {
                rows.append(plan_dict(r));
            }
            py::dict d;
            d["rows"] = rows;
            d["first_passing"] = scan.first_passing;
            return d;
        },
        py::arg("scenario"), py::arg("m_max"));
    m.def(
        "detect_nonmonotonicity",
        [](const TransmissionScenario &s, int lo, int hi) {
            std::vector<std::pair<int, int>> out;
            for (const auto &d : detect_nonmonotonicity(s, lo, hi)) {
                out.emplace_back(d.m, d.later_m);
            }
            return out;
        },
        py::arg("scenario"), py::arg("m_lo"), py::arg("m_hi"));
    m.def("di_confirmation_count", &di_confirmation_count, py::arg("p_reg"), py::arg("confidence"));
    m.def(
        "filter_registration_probability", &filter_registration_probability, py::arg("k"), py::arg("t0"),
        py::arg("rho1") = py::none());
    m.def("intelligibility", &intelligibility, py::arg("sent"), py::arg("received"));
    m.def("transmission_speed", &transmission_speed, py::arg("bits"), py::arg("seconds"));

    m.def(
        "binary_trajectory",
        [](double k1, double k2, double a0, double b0, double t) {
            auto p = binary_trajectory({k1, k2, Projector::basis(2, 0)}, {a0, b0}, t);
            return py::make_tuple(p.p0, p.p1);
        },
        py::arg("k1"), py::arg("k2"), py::arg("a0"), py::arg("b0"), py::arg("t"));
    m.def(
        "binary_asymptotic",
        [](double k1, double k2, double a0, double b0) {
            auto p = binary_asymptotic({k1, k2, Projector::basis(2, 0)}, {a0, b0});
            return py::make_tuple(p.p0, p.p1);
        },
        py::arg("k1"), py::arg("k2"), py::arg("a0"), py::arg("b0"));
    m.def(
        "two_state_trajectory",
        [](double k1, double k2, double n1, double n2, double a0, double b0, double t) {
            TwoStateDetectorSpec spec{k1, k2, n1, n2, Projector::basis(2, 0), Projector::basis(2, 1)};
            auto p = two_state_trajectory(spec, a0, b0, t);
            return py::make_tuple(p.p0, p.p1, p.p2);
        },
        py::arg("k1"), py::arg("k2"), py::arg("n1"), py::arg("n2"), py::arg("a0"), py::arg("b0"), py::arg("t"));
    m.def(
        "n_state_trajectory",
        [](double k, int n, int j, double t) {
            NStateDetectorSpec spec{k, {}};
            for (int i = 0; i < n; i++) {
                spec.projectors.push_back(Projector::basis(n, i));
            }
            return n_state_trajectory(spec, j, t).values();
        },
        py::arg("k"), py::arg("n"), py::arg("j"), py::arg("t"));
    m.def(
        "filter_quantum_output",
        [](const QuantumOperator &rho, double k, int aligned, double t) {
            FilterSpec spec{k, Projector::basis(static_cast<int>(rho.rows()), aligned)};
            return filter_quantum_output(DensityBlock(rho), spec, t).matrix();
        },
        py::arg("rho"), py::arg("k"), py::arg("aligned"), py::arg("t"));
    m.def(
        "filter_classical_output",
        [](double p0, double p1, double q1, double k, double t) {
            auto r = filter_classical_output(p0, p1, q1, k, t);
            return py::make_tuple(r.p0, r.p1);
        },
        py::arg("p0"), py::arg("p1"), py::arg("q1"), py::arg("k"), py::arg("t"));

    m.def(
        "classify_pattern",
        [](const std::string &text) {
            BlockPattern p = BlockPattern::parse(text);
            py::dict d;
            d["pattern"] = p.str();
            if (p.dim() == 2) {
                auto c = admissible_2x2(p);
                d["tag"] = c.tag ? std::string(to_string(*c.tag)) : std::string("INADMISSIBLE");
                d["violated"] = c.violated;
                d["topology"] = py::none();
            } else if (p.dim() == 3) {
                auto c = admissible_3x3(p);
                d["tag"] = std::string(to_string(c.tag));
                d["violated"] = c.violated;
                if (c.admissible() && c.tag != ShapeTag3x3::kDiagonal) {
                    d["topology"] = std::string(to_string(classify_topology(c.tag)));
                } else {
                    d["topology"] = py::none();
                }
            } else {
                throw std::invalid_argument("classify_pattern: only 2x2 and 3x3 patterns are classified");
            }
            return d;
        },
        py::arg("pattern"));
    m.def(
        "enumerate_admissible_patterns",
        [](int dim) {
            py::list out;
            for (const auto &e : enumerate_admissible_patterns(dim)) {
                py::dict d;
                d["label"] = e.label;
                d["tag"] = e.tag;
                d["pattern"] = e.pattern.str();
                d["duplicate_of"] = e.duplicate_of;
                d["conditions_hold"] = e.conditions_hold;
                out.append(d);
            }
            return out;
        },
        py::arg("classical_dim"));

    m.def(
        "evolve",
        [](const std::vector<QuantumOperator> &blocks, const std::vector<BlockMap> &couplings, double step,
           double duration, int record_every) {
            HybridState rho0(blocks);
            auto vs = to_couplings(couplings, rho0.classical_dim(), rho0.quantum_dim());
            EvolutionConfig cfg;
            cfg.step = step;
            cfg.duration = duration;
            cfg.record_every = record_every;
            py::gil_scoped_release release;
            auto traj = evolve(rho0, Hamiltonian::zero(rho0.classical_dim(), rho0.quantum_dim()), vs, cfg);
            py::gil_scoped_acquire acquire;
            return trajectory_dict(traj);
        },
        py::arg("blocks"), py::arg("couplings"), py::arg("step") = 1e-3, py::arg("duration") = 1.0,
        py::arg("record_every") = 1,
        "Blocks are the diagonal blocks of the initial state; each coupling maps (row, col) to a block.");
    m.def(
        "check_cp_conditions",
        [](const std::vector<BlockMap> &couplings, int classical_dim, int quantum_dim) {
            auto vs = to_couplings(couplings, classical_dim, quantum_dim);
            CpReport r = check_cp_conditions(vs, {});
            return py::make_tuple(r.ok(), r.summary());
        },
        py::arg("couplings"), py::arg("classical_dim"), py::arg("quantum_dim"));

    m.def(
        "simulate_config",
        [](const std::string &text) {
            ScenarioConfig cfg = parse_config(text);
            auto vs = build_couplings(cfg);
            HybridState rho0 = build_initial_state(cfg);
            auto traj = evolve(rho0, Hamiltonian::zero(rho0.classical_dim(), rho0.quantum_dim()), vs, build_evolution(cfg));
            return trajectory_dict(traj);
        },
        py::arg("text"), "Parse a scenario file's text and integrate it.");

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
