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

#include "qclink/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "qclink/config.h"
#include "qclink/coupling_shapes.h"
#include "qclink/detectors.h"
#include "qclink/lindblad.h"
#include "qclink/planner.h"

#ifndef QCLINK_VERSION
#define QCLINK_VERSION "0.0.0"
#endif

namespace qclink {

namespace {

/// A failure that maps directly onto an exit code.
struct CliFailure {
    int code;
    std::string message;
};

std::string fmt(double x, int precision = 12) {
    std::ostringstream ss;
    ss << std::setprecision(precision) << x;
    return ss.str();
}

std::string range_str(const IntegerRange &r) {
    if (r.empty()) {
        return "empty";
    }
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw CliFailure{kExitConfig, "cannot open config file '" + path + "'"};
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ScenarioConfig parse_or_fail(const std::string &text) {
    try {
        return parse_config(text);
    } catch (const ConfigError &ex) {
        throw CliFailure{kExitConfig, std::string("config: ") + ex.what()};
    }
}

std::string hex64(std::uint64_t v) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << v;
    return ss.str();
}

/// Hash of the config text plus every argument except the output path.
std::string run_hash(const std::string &config_text, const std::vector<std::string> &args) {
    std::string blob = config_text;
    blob.push_back('\0');
    for (size_t k = 0; k < args.size(); k++) {
        if (args[k] == "-o" || args[k] == "--output") {
            k++;
            continue;
        }
        if (args[k].rfind("--output=", 0) == 0) {
            continue;
        }
        blob += args[k];
        blob.push_back('\0');
    }
    return "fnv1a64:" + hex64(fnv1a64(blob));
}

void write_header(std::ostream &out, const std::string &command, const std::string &hash, std::optional<std::uint64_t> seed) {
    out << "# qclink " << version_string() << " command=" << command << " config_hash=" << hash;
    out << " seed=" << (seed ? std::to_string(*seed) : std::string("none")) << "\n";
}

int simulate(const ScenarioConfig &cfg, std::uint64_t seed, std::ostream &body) {
    auto couplings = build_couplings(cfg);
    HybridState rho0 = [&] {
        try {
            return build_initial_state(cfg);
        } catch (const ConfigError &ex) {
            throw CliFailure{kExitConfig, std::string("config: ") + ex.what()};
        }
    }();
    EvolutionConfig ecfg = build_evolution(cfg);
    ecfg.cp_seed = seed;
    Hamiltonian h = Hamiltonian::zero(rho0.classical_dim(), rho0.quantum_dim());
    Trajectory traj;
    try {
        traj = evolve(rho0, h, couplings, ecfg);
    } catch (const CpConditionError &ex) {
        throw CliFailure{kExitConfig, std::string("couplings: ") + ex.what()};
    } catch (const NumericalGuardError &ex) {
        throw CliFailure{kExitNumericalGuard, std::string("numerical guard: ") + ex.what()};
    }
    body << "# family=" << to_string(cfg.family) << " classical_dim=" << rho0.classical_dim()
         << " quantum_dim=" << rho0.quantum_dim() << " couplings=" << couplings.size() << "\n";
    write_trajectory_csv(body, traj);
    return kExitOk;
}

void require_ground_start(const ScenarioConfig &cfg) {
    ProbabilityVector p = build_classical(cfg);
    if (std::abs(p[0] - 1.0) > 1e-12) {
        throw CliFailure{
            kExitConfig, "config: closed forms for family " + std::string(to_string(cfg.family)) +
                             " assume the detector starts in event 0 (signal.classical = 1,0,...)"};
    }
}

int efficiency(const ScenarioConfig &cfg, std::ostream &body) {
    int n = resolved_classical_dim(cfg);
    DensityBlock w = build_signal(cfg);
    std::vector<double> times;
    for (int g = 0; g < cfg.grid_points; g++) {
        times.push_back(cfg.duration * g / (cfg.grid_points - 1));
    }
    std::vector<std::vector<double>> rows;
    std::vector<double> limit;

    switch (cfg.family) {
        case DetectorFamily::kBinary: {
            require_ground_start(cfg);
            auto spec = build_binary_spec(cfg);
            double a0 = spec.e.expectation(w.matrix());
            SignalDecomposition sig{a0, std::max(0.0, 1.0 - a0)};
            for (double t : times) {
                auto p = binary_trajectory(spec, sig, t);
                rows.push_back({p.p0, p.p1});
            }
            auto inf = binary_asymptotic(spec, sig);
            limit = {inf.p0, inf.p1};
            break;
        }
        case DetectorFamily::kTwoState: {
            require_ground_start(cfg);
            auto spec = build_two_state_spec(cfg);
            double a0 = spec.e2.expectation(w.matrix());
            double b0 = spec.e3.expectation(w.matrix());
            for (double t : times) {
                auto p = two_state_trajectory(spec, a0, b0, t);
                rows.push_back({p.p0, p.p1, p.p2});
            }
            auto inf = two_state_asymptotic(spec, a0, b0);
            limit = {1.0 - inf.total_efficiency, inf.p1_inf, inf.p2_inf};
            break;
        }
        case DetectorFamily::kNState: {
            require_ground_start(cfg);
            auto spec = build_n_state_spec(cfg);
            std::vector<double> aligned;
            for (const auto &e : spec.projectors) {
                aligned.push_back(e.expectation(w.matrix()));
            }
            auto evaluate = [&](double t, bool at_infinity) {
                std::vector<double> p(n, 0.0);
                double registered = 0.0;
                for (int j = 1; j < n; j++) {
                    double fraction = at_infinity ? 1.0 : n_state_trajectory(spec, j, t)[j];
                    p[j] = aligned[j - 1] * fraction;
                    registered += p[j];
                }
                p[0] = 1.0 - registered;
                return p;
            };
            for (double t : times) {
                rows.push_back(evaluate(t, false));
            }
            limit = evaluate(0.0, true);
            break;
        }
        case DetectorFamily::kFilter: {
            auto spec = build_filter_spec(cfg);
            ProbabilityVector p = build_classical(cfg);
            double q1 = spec.e1.expectation(w.matrix());
            for (double t : times) {
                auto r = filter_classical_output(p[0], p[1], q1, spec.k, t);
                rows.push_back({r.p0, r.p1});
            }
            double half_gap = 0.5 * (p[0] - p[1]) * q1;
            limit = {p[0] - half_gap, p[1] + half_gap};
            break;
        }
        case DetectorFamily::kNone:
        case DetectorFamily::kCustom:
            throw CliFailure{
                kExitConfig, "config: efficiency needs detector.family binary, two_state, n_state or filter"};
    }

    body << "# family=" << to_string(cfg.family) << " grid_points=" << cfg.grid_points << " duration=" << fmt(cfg.duration)
         << "; final row t=inf holds the asymptotic values\n";
    body << "t";
    for (int j = 0; j < n; j++) {
        body << ",p_" << j;
    }
    body << "\n";
    for (size_t r = 0; r < rows.size(); r++) {
        body << fmt(times[r]);
        for (double v : rows[r]) {
            body << "," << fmt(v);
        }
        body << "\n";
    }
    body << "inf";
    for (double v : limit) {
        body << "," << fmt(v);
    }
    body << "\n";
    return kExitOk;
}

struct ValidateRow {
    std::string label;
    std::string pattern;
    std::string tag;
    std::string topology;
    bool cp_pass;
    std::string conditions_hold;
    std::string duplicate_of;
    std::string note;
};

bool cp_passes(const CouplingOperator &v, std::uint64_t seed) {
    CpCheckOptions opts;
    opts.seed = seed;
    std::vector<CouplingOperator> one{v};
    return check_cp_conditions(one, {}, opts).ok();
}

ValidateRow classify_pattern(const std::string &label, const BlockPattern &pattern, int quantum_dim, Rng &rng, std::uint64_t seed) {
    ValidateRow row{label, pattern.str(), "", "-", false, "-", "-", ""};
    if (pattern.dim() == 2) {
        auto c = admissible_2x2(pattern);
        row.tag = c.tag ? std::string(to_string(*c.tag)) : "INADMISSIBLE";
        row.conditions_hold = c.violated.empty() ? "yes" : "no";
        for (const auto &v : c.violated) {
            row.note += (row.note.empty() ? "violates " : " ") + v;
        }
    } else {
        auto c = admissible_3x3(pattern);
        row.tag = std::string(to_string(c.tag));
        row.conditions_hold = c.conditions_hold() ? "yes" : "no";
        if (c.admissible() && c.tag != ShapeTag3x3::kDiagonal) {
            row.topology = std::string(to_string(classify_topology(c.tag)));
        }
        for (const auto &v : c.violated) {
            row.note += (row.note.empty() ? "violates " : " ") + v;
        }
    }
    int d = std::max(quantum_dim, std::max(1, pattern.count()));
    row.cp_pass = cp_passes(instantiate_pattern(pattern, d, rng), seed);
    return row;
}

int validate(
    const std::optional<std::string> &pattern_text,
    const std::optional<ScenarioConfig> &cfg,
    int quantum_dim,
    std::uint64_t seed,
    bool csv_only,
    std::ostream &body) {
    Rng rng(seed);
    std::vector<ValidateRow> rows;
    std::vector<std::string> report;

    if (pattern_text) {
        BlockPattern pattern = [&] {
            try {
                return BlockPattern::parse(*pattern_text);
            } catch (const std::invalid_argument &ex) {
                throw CliFailure{kExitUsage, ex.what()};
            }
        }();
        if (pattern.dim() != 2 && pattern.dim() != 3) {
            throw CliFailure{kExitUsage, "validate: only 2x2 and 3x3 patterns can be classified"};
        }
        rows.push_back(classify_pattern("input", pattern, quantum_dim, rng, seed));
    } else if (cfg) {
        auto couplings = build_couplings(*cfg);
        int n = resolved_classical_dim(*cfg);
        for (size_t i = 0; i < couplings.size(); i++) {
            BlockPattern pattern = BlockPattern::of(couplings[i]);
            ValidateRow row{"V" + std::to_string(i), pattern.str(), "-", "-", cp_passes(couplings[i], seed), "-", "-", ""};
            if (n == 2 || n == 3) {
                auto classified = classify_pattern(row.label, pattern, quantum_dim, rng, seed);
                row.tag = classified.tag;
                row.topology = classified.topology;
                row.conditions_hold = classified.conditions_hold;
                row.note = classified.note;
            }
            rows.push_back(row);
        }
        HybridState rho0 = [&] {
            try {
                return build_initial_state(*cfg);
            } catch (const ConfigError &ex) {
                throw CliFailure{kExitConfig, std::string("config: ") + ex.what()};
            }
        }();
        std::vector<HybridState> probes{rho0};
        CpCheckOptions opts;
        opts.seed = seed;
        CpReport joint = check_cp_conditions(couplings, probes, opts);
        report.push_back("joint CP check over all couplings: " + joint.summary());
    } else {
        for (int dim : {2, 3}) {
            auto catalogue = enumerate_admissible_patterns(dim);
            for (size_t k = 0; k < catalogue.size(); k++) {
                const auto &entry = catalogue[k];
                ValidateRow row = classify_pattern(entry.label, entry.pattern, quantum_dim, rng, seed);
                row.tag = entry.tag;
                if (dim == 3) {
                    row.topology = std::string(to_string(classify_topology(static_cast<ShapeTag3x3>(k))));
                }
                row.conditions_hold = entry.conditions_hold ? "yes" : "no";
                if (entry.duplicate_of) {
                    row.duplicate_of = *entry.duplicate_of;
                    row.note += (row.note.empty() ? "" : "; ") + std::string("same pattern as ") + *entry.duplicate_of;
                }
                rows.push_back(row);
            }
        }
    }

    if (!csv_only) {
        for (const auto &r : rows) {
            body << "# " << r.label << " " << r.pattern << ": " << r.tag;
            if (r.topology != "-") {
                body << " (" << r.topology << ")";
            }
            body << ", CP structural check " << (r.cp_pass ? "passed" : "FAILED");
            if (!r.note.empty()) {
                body << ", " << r.note;
            }
            body << "\n";
        }
        for (const auto &line : report) {
            body << "# " << line << "\n";
        }
    }
    body << "label,pattern,tag,topology,cp_pass,conditions_hold,duplicate_of\n";
    for (const auto &r : rows) {
        body << r.label << "," << r.pattern << "," << r.tag << "," << r.topology << "," << (r.cp_pass ? "true" : "false")
             << "," << r.conditions_hold << "," << r.duplicate_of << "\n";
    }
    return kExitOk;
}

int plan(const TransmissionScenario &scenario, int m_max, std::ostream &body) {
    PlanScan scan;
    int start = 0;
    try {
        start = minimal_m(scenario);
        scan = scan_plan(scenario, m_max);
    } catch (const std::invalid_argument &ex) {
        throw CliFailure{kExitUsage, std::string("plan: ") + ex.what()};
    }
    body << "# rho1=" << fmt(scenario.rho1) << " eff=" << fmt(scenario.eta_det) << " accuracy=" << fmt(scenario.accuracy)
         << " margin=" << fmt(scenario.effective_margin()) << " confidence=" << fmt(scenario.confidence_target)
         << " m_max=" << m_max << "\n";
    body << "m,i_minus,i_plus,set_lo,set_hi,confidence\n";
    for (const auto &r : scan.rows) {
        body << r.m << "," << fmt(r.i_minus) << "," << fmt(r.i_plus) << "," << r.advantageous.lo << ","
             << r.advantageous.hi << "," << fmt(r.confidence) << "\n";
    }
    body << "# summary: minimal_m=" << start;
    if (scan.first_passing) {
        const PlanResult &hit = scan.rows[*scan.first_passing - start];
        body << " first_m=" << hit.m << " set=" << range_str(hit.advantageous) << " confidence=" << fmt(hit.confidence);
    } else {
        body << " first_m=none (target not reached for m <= " << m_max << ")";
    }
    body << "\n";
    return kExitOk;
}

int reproduce(std::ostream &body) {
    auto rows = reproduction_table();
    int passed = 0;
    body << "quantity,computed,expected,tolerance,status\n";
    for (const auto &r : rows) {
        body << r.quantity << "," << r.computed << "," << r.expected << "," << r.tolerance << ","
             << (r.pass ? "pass" : "FAIL") << "\n";
        passed += r.pass ? 1 : 0;
    }
    body << "# " << passed << "/" << rows.size() << " rows pass\n";
    return passed == static_cast<int>(rows.size()) ? kExitOk : kExitMismatch;
}

ReproductionRow numeric_row(std::string quantity, double computed, double expected, double tol) {
    return {std::move(quantity), fmt(computed, 10), fmt(expected), fmt(tol), std::abs(computed - expected) <= tol};
}

ReproductionRow exact_row(std::string quantity, const std::string &computed, const std::string &expected) {
    return {std::move(quantity), computed, expected, "exact", computed == expected};
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string_view version_string() {
    return QCLINK_VERSION;
}

std::vector<ReproductionRow> reproduction_table() {
    std::vector<ReproductionRow> rows;
    TransmissionScenario base;
    base.rho1 = 0.8;
    base.eta_det = 0.9;
    base.accuracy = 0.05;
    base.margin = 0.045;

    rows.push_back(exact_row("minimal_m", std::to_string(minimal_m(base)), "12"));
    auto [lo12, hi12] = interval_expectations(12, base);
    rows.push_back(numeric_row("i_minus(m=12)", lo12, 8.1, 1e-9));
    rows.push_back(numeric_row("i_plus(m=12)", hi12, 9.18, 1e-9));
    rows.push_back(exact_row("set(m=12)", range_str(advantageous_set(12, base)), "9..9"));
    rows.push_back(numeric_row("P(m=12)", plan_for(12, base).confidence, 0.25, 0.005));
    rows.push_back(numeric_row("P(m=15)", plan_for(15, base).confidence, 0.22, 0.005));

    TransmissionScenario sixty = base;
    sixty.confidence_target = 0.6;
    auto scan = scan_plan(sixty, 100);
    rows.push_back(exact_row(
        "first m with P>=0.6", scan.first_passing ? std::to_string(*scan.first_passing) : std::string("none"), "62"));
    rows.push_back(exact_row("set(m=62)", range_str(advantageous_set(62, base)), "42..47"));
    rows.push_back(numeric_row("P(m=62)", plan_for(62, base).confidence, 0.603, 0.005));

    TransmissionScenario low = base;
    low.eta_det = 0.45;
    rows.push_back(exact_row("set(m=66 eff=0.45)", range_str(advantageous_set(66, low)), "21..26"));
    rows.push_back(numeric_row("P(m=66 eff=0.45)", plan_for(66, low).confidence, 0.56, 0.01));

    rows.push_back(exact_row("D I count (p=0.45 target=0.9)", std::to_string(di_confirmation_count(0.45, 0.9)), "4"));

    BinaryDetectorSpec spec{1.0, 1.0, Projector::basis(2, 0)};
    std::vector<CouplingOperator> v{binary_coupling(spec)};
    HybridState rho0 = product_state(DensityBlock::pure(StateVector::Unit(2, 0)), ProbabilityVector::initial(2));
    EvolutionConfig ecfg;
    ecfg.step = 1e-2;
    ecfg.duration = 10.0;
    ecfg.record_every = 1000;
    auto traj = evolve(rho0, Hamiltonian::zero(2, 2), v, ecfg);
    rows.push_back(numeric_row("binary p1(t=10) k1=k2=1", traj.back().state.block_traces()[1], 0.5, 1e-4));

    NStateDetectorSpec nspec{1.0, {Projector::basis(5, 0), Projector::basis(5, 1), Projector::basis(5, 2),
                                   Projector::basis(5, 3), Projector::basis(5, 4)}};
    rows.push_back(numeric_row("n-state p_j(t=50) n=5", n_state_trajectory(nspec, 3, 50.0)[3], 1.0, 1e-9));
    return rows;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qclink: hybrid quantum-classical detector simulator and transmission planner", "qclink"};
    app.set_version_flag("--version", std::string(version_string()));
    app.require_subcommand(1);

    std::string config_path;
    std::string output_path;
    std::uint64_t seed = 7;

    auto *sim = app.add_subcommand("simulate", "Integrate the Liouville equation; writes a trajectory CSV");
    sim->add_option("-c,--config", config_path, "Scenario file")->required()->check(CLI::ExistingFile);
    sim->add_option("-o,--output", output_path, "Write CSV here instead of stdout");
    sim->add_option("--seed", seed, "Seed for the random CP probes")->capture_default_str();

    auto *eff = app.add_subcommand("efficiency", "Closed-form detector probabilities on a time grid");
    eff->add_option("-c,--config", config_path, "Scenario file")->required()->check(CLI::ExistingFile);
    eff->add_option("-o,--output", output_path, "Write CSV here instead of stdout");

    std::string pattern;
    int quantum_dim = 3;
    std::uint64_t validate_seed = 20260101;
    bool csv_only = false;
    auto *val = app.add_subcommand("validate", "Classify coupling shapes and run the CP structural check");
    auto *pattern_opt = val->add_option("--pattern", pattern, "Block pattern such as 01;10 (rows separated by ';')");
    auto *val_config = val->add_option("-c,--config", config_path, "Scenario file whose couplings are checked")
                           ->check(CLI::ExistingFile);
    val->add_option("--quantum-dim", quantum_dim, "Quantum dimension for instantiated patterns")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    val->add_option("--seed", validate_seed, "Seed for instantiation and random probes")->capture_default_str();
    val->add_flag("--csv", csv_only, "Omit the human-readable report lines");
    val->add_option("-o,--output", output_path, "Write output here instead of stdout");
    pattern_opt->excludes(val_config);

    std::optional<double> rho1, eff_det, accuracy, margin, conf;
    std::optional<int> m_max;
    auto *pl = app.add_subcommand("plan", "Sample-size and confidence scan for a transmission scenario");
    pl->add_option("-c,--config", config_path, "Scenario file providing [plan] defaults")->check(CLI::ExistingFile);
    pl->add_option("--rho1", rho1, "Signal weight on the code projector");
    pl->add_option("--eff", eff_det, "Detector efficiency factor");
    pl->add_option("--accuracy", accuracy, "Half-width a of the decoding interval");
    pl->add_option("--margin", margin, "Count half-width per state (default eff * accuracy)");
    pl->add_option("--confidence", conf, "Target confidence level");
    pl->add_option("--m-max", m_max, "Largest m in the scan");
    pl->add_option("-o,--output", output_path, "Write CSV here instead of stdout");

    auto *rep = app.add_subcommand("reproduce", "Recompute the reference figures and compare");
    rep->add_option("-o,--output", output_path, "Write CSV here instead of stdout");

    std::vector<const char *> argv{"qclink"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << version_string() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << "\n" << app.help();
        return kExitUsage;
    }

    auto *cmd = app.get_subcommands().front();
    std::ostringstream body;
    int code = kExitOk;
    try {
        std::string config_text;
        std::optional<ScenarioConfig> cfg;
        if (!config_path.empty()) {
            config_text = read_file(config_path);
            cfg = parse_or_fail(config_text);
        }
        std::string hash = run_hash(config_text, args);
        std::string name = cmd->get_name();
        if (name == "simulate") {
            write_header(body, name, hash, seed);
            code = simulate(*cfg, seed, body);
        } else if (name == "efficiency") {
            write_header(body, name, hash, std::nullopt);
            code = efficiency(*cfg, body);
        } else if (name == "validate") {
            write_header(body, name, hash, validate_seed);
            std::optional<std::string> pattern_arg;
            if (!pattern.empty()) {
                pattern_arg = pattern;
            }
            code = validate(pattern_arg, cfg, quantum_dim, validate_seed, csv_only, body);
        } else if (name == "plan") {
            TransmissionScenario scenario = cfg ? cfg->plan : TransmissionScenario{};
            int limit = cfg ? cfg->m_max : 100;
            if (rho1) scenario.rho1 = *rho1;
            if (eff_det) scenario.eta_det = *eff_det;
            if (accuracy) scenario.accuracy = *accuracy;
            if (margin) scenario.margin = *margin;
            if (conf) scenario.confidence_target = *conf;
            if (m_max) limit = *m_max;
            write_header(body, name, hash, std::nullopt);
            code = plan(scenario, limit, body);
        } else {
            write_header(body, name, hash, std::nullopt);
            code = reproduce(body);
        }
    } catch (const CliFailure &ex) {
        err << "error: " << ex.message << "\n";
        return ex.code;
    } catch (const ConfigError &ex) {
        err << "error: config: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const NumericalGuardError &ex) {
        err << "error: numerical guard: " << ex.what() << "\n";
        return kExitNumericalGuard;
    } catch (const std::invalid_argument &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitConfig;
    }

    if (output_path.empty()) {
        out << body.str();
    } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << output_path << "'\n";
            return kExitUsage;
        }
        f << body.str();
    }
    return code;
}

}  // namespace qclink
