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

#include "qclink/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace qclink {

namespace {

const std::map<std::string, std::set<std::string>> &known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"detector", {"family", "quantum_dim", "k1", "k2", "n1", "n2", "k", "projector", "e2", "e3", "projectors"}},
        {"coupling", {"classical_dim", "entry"}},
        {"signal", {"weights", "offdiag", "classical"}},
        {"evolution", {"step", "duration", "record_every", "grid_points"}},
        {"plan", {"rho1", "eff", "accuracy", "margin", "confidence", "m_max"}},
    };
    return keys;
}

const std::set<std::string> kRepeatable{"coupling.entry", "signal.offdiag"};

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
        return {};
    }
    size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double parse_double(const std::string &s, int line, const std::string &what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError(line, what + ": expected a number, got '" + s + "'");
    }
    return v;
}

int parse_int(const std::string &s, int line, const std::string &what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError(line, what + ": expected an integer, got '" + s + "'");
    }
    return v;
}

std::vector<double> parse_double_list(const std::string &s, int line, const std::string &what) {
    std::vector<double> out;
    for (const auto &item : split(s, ',')) {
        out.push_back(parse_double(item, line, what));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string &s, int line, const std::string &what) {
    std::vector<int> out;
    for (const auto &item : split(s, ',')) {
        out.push_back(parse_int(item, line, what));
    }
    return out;
}

DetectorFamily parse_family(const std::string &s, int line) {
    static const std::map<std::string, DetectorFamily> names{
        {"none", DetectorFamily::kNone},         {"custom", DetectorFamily::kCustom},
        {"binary", DetectorFamily::kBinary},     {"two_state", DetectorFamily::kTwoState},
        {"n_state", DetectorFamily::kNState},    {"filter", DetectorFamily::kFilter},
    };
    auto it = names.find(s);
    if (it == names.end()) {
        throw ConfigError(
            line, "detector.family: unknown family '" + s + "' (expected none, custom, binary, two_state, n_state, filter)");
    }
    return it->second;
}

void assign(ScenarioConfig &cfg, const std::string &section, const std::string &key, const std::string &value, int line) {
    std::string name = section + "." + key;
    if (name == "detector.family") {
        cfg.family = parse_family(value, line);
    } else if (name == "detector.quantum_dim") {
        cfg.quantum_dim = parse_int(value, line, name);
    } else if (name == "detector.k1") {
        cfg.k1 = parse_double(value, line, name);
    } else if (name == "detector.k2") {
        cfg.k2 = parse_double(value, line, name);
    } else if (name == "detector.n1") {
        cfg.n1 = parse_double(value, line, name);
    } else if (name == "detector.n2") {
        cfg.n2 = parse_double(value, line, name);
    } else if (name == "detector.k") {
        cfg.k = parse_double(value, line, name);
    } else if (name == "detector.projector") {
        cfg.projector = parse_int(value, line, name);
    } else if (name == "detector.e2") {
        cfg.e2 = parse_int(value, line, name);
    } else if (name == "detector.e3") {
        cfg.e3 = parse_int(value, line, name);
    } else if (name == "detector.projectors") {
        cfg.projectors = parse_int_list(value, line, name);
    } else if (name == "coupling.classical_dim") {
        cfg.classical_dim = parse_int(value, line, name);
    } else if (name == "coupling.entry") {
        auto parts = split(value, ',');
        if (parts.size() != 6) {
            throw ConfigError(line, "coupling.entry: expected op,row,col,coef,i,j");
        }
        cfg.entries.push_back(
            {parse_int(parts[0], line, name), parse_int(parts[1], line, name), parse_int(parts[2], line, name),
             parse_double(parts[3], line, name), parse_int(parts[4], line, name), parse_int(parts[5], line, name),
             line});
    } else if (name == "signal.weights") {
        cfg.weights = parse_double_list(value, line, name);
    } else if (name == "signal.offdiag") {
        auto parts = split(value, ':');
        if (parts.size() != 3 && parts.size() != 4) {
            throw ConfigError(line, "signal.offdiag: expected i:j:re or i:j:re:im");
        }
        double im = parts.size() == 4 ? parse_double(parts[3], line, name) : 0.0;
        cfg.offdiag.push_back(
            {parse_int(parts[0], line, name), parse_int(parts[1], line, name),
             Complex(parse_double(parts[2], line, name), im), line});
    } else if (name == "signal.classical") {
        cfg.classical = parse_double_list(value, line, name);
    } else if (name == "evolution.step") {
        cfg.step = parse_double(value, line, name);
    } else if (name == "evolution.duration") {
        cfg.duration = parse_double(value, line, name);
    } else if (name == "evolution.record_every") {
        cfg.record_every = parse_int(value, line, name);
    } else if (name == "evolution.grid_points") {
        cfg.grid_points = parse_int(value, line, name);
    } else if (name == "plan.rho1") {
        cfg.plan.rho1 = parse_double(value, line, name);
    } else if (name == "plan.eff") {
        cfg.plan.eta_det = parse_double(value, line, name);
    } else if (name == "plan.accuracy") {
        cfg.plan.accuracy = parse_double(value, line, name);
    } else if (name == "plan.margin") {
        cfg.plan.margin = parse_double(value, line, name);
    } else if (name == "plan.confidence") {
        cfg.plan.confidence_target = parse_double(value, line, name);
    } else if (name == "plan.m_max") {
        cfg.m_max = parse_int(value, line, name);
    }
}

void require_index(const ScenarioConfig &cfg, int index, const std::string &key, int line) {
    if (index < 0 || index >= cfg.quantum_dim) {
        throw ConfigError(
            line, key + ": basis index " + std::to_string(index) + " outside [0, " +
                      std::to_string(cfg.quantum_dim - 1) + "]");
    }
}

void require_key(const ScenarioConfig &cfg, const std::optional<double> &value, const std::string &key) {
    if (!value) {
        throw ConfigError(
            cfg.line_of("detector.family"),
            "detector." + key + " is required for family " + std::string(to_string(cfg.family)));
    }
}

void check_semantics(const ScenarioConfig &cfg) {
    if (cfg.quantum_dim < 1) {
        throw ConfigError(cfg.line_of("detector.quantum_dim"), "detector.quantum_dim must be >= 1");
    }
    switch (cfg.family) {
        case DetectorFamily::kBinary:
            require_key(cfg, cfg.k1, "k1");
            require_key(cfg, cfg.k2, "k2");
            require_index(cfg, cfg.projector, "detector.projector", cfg.line_of("detector.projector"));
            break;
        case DetectorFamily::kTwoState:
            require_key(cfg, cfg.k1, "k1");
            require_key(cfg, cfg.k2, "k2");
            require_key(cfg, cfg.n1, "n1");
            require_key(cfg, cfg.n2, "n2");
            require_index(cfg, cfg.e2, "detector.e2", cfg.line_of("detector.e2"));
            require_index(cfg, cfg.e3, "detector.e3", cfg.line_of("detector.e3"));
            if (cfg.e2 == cfg.e3) {
                throw ConfigError(cfg.line_of("detector.e3"), "detector.e2 and detector.e3 must differ");
            }
            break;
        case DetectorFamily::kNState: {
            require_key(cfg, cfg.k, "k");
            if (cfg.projectors.empty()) {
                throw ConfigError(cfg.line_of("detector.family"), "detector.projectors is required for family n_state");
            }
            std::set<int> seen;
            for (int p : cfg.projectors) {
                require_index(cfg, p, "detector.projectors", cfg.line_of("detector.projectors"));
                if (!seen.insert(p).second) {
                    throw ConfigError(cfg.line_of("detector.projectors"), "detector.projectors: repeated index");
                }
            }
            break;
        }
        case DetectorFamily::kFilter:
            require_key(cfg, cfg.k, "k");
            require_index(cfg, cfg.projector, "detector.projector", cfg.line_of("detector.projector"));
            break;
        case DetectorFamily::kCustom:
        case DetectorFamily::kNone:
            break;
    }

    if (cfg.family != DetectorFamily::kCustom && !cfg.entries.empty()) {
        throw ConfigError(cfg.entries.front().line, "coupling.entry requires detector.family = custom");
    }
    if (cfg.family == DetectorFamily::kCustom && cfg.classical_dim < 1) {
        throw ConfigError(cfg.line_of("coupling.classical_dim"), "coupling.classical_dim must be >= 1 for family custom");
    }
    if (cfg.classical_dim < 0) {
        throw ConfigError(cfg.line_of("coupling.classical_dim"), "coupling.classical_dim must be non-negative");
    }
    int n = resolved_classical_dim(cfg);
    for (const auto &e : cfg.entries) {
        if (e.op < 0) {
            throw ConfigError(e.line, "coupling.entry: operator index must be non-negative");
        }
        if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n) {
            throw ConfigError(e.line, "coupling.entry: block index outside [0, " + std::to_string(n - 1) + "]");
        }
        require_index(cfg, e.i, "coupling.entry", e.line);
        require_index(cfg, e.j, "coupling.entry", e.line);
    }

    if (!cfg.weights.empty() && static_cast<int>(cfg.weights.size()) != cfg.quantum_dim) {
        throw ConfigError(
            cfg.line_of("signal.weights"),
            "signal.weights: expected " + std::to_string(cfg.quantum_dim) + " values, got " +
                std::to_string(cfg.weights.size()));
    }
    for (const auto &w : cfg.offdiag) {
        require_index(cfg, w.i, "signal.offdiag", w.line);
        require_index(cfg, w.j, "signal.offdiag", w.line);
        if (w.i == w.j) {
            throw ConfigError(w.line, "signal.offdiag: i and j must differ (use weights for diagonal entries)");
        }
    }
    if (!cfg.classical.empty() && static_cast<int>(cfg.classical.size()) != n) {
        throw ConfigError(
            cfg.line_of("signal.classical"),
            "signal.classical: expected " + std::to_string(n) + " values, got " + std::to_string(cfg.classical.size()));
    }

    if (!(cfg.step > 0.0)) {
        throw ConfigError(cfg.line_of("evolution.step"), "evolution.step must be positive");
    }
    if (!(cfg.duration >= 0.0)) {
        throw ConfigError(cfg.line_of("evolution.duration"), "evolution.duration must be non-negative");
    }
    if (cfg.record_every < 1) {
        throw ConfigError(cfg.line_of("evolution.record_every"), "evolution.record_every must be >= 1");
    }
    if (cfg.grid_points < 2) {
        throw ConfigError(cfg.line_of("evolution.grid_points"), "evolution.grid_points must be >= 2");
    }
    try {
        cfg.plan.validate();
    } catch (const std::invalid_argument &ex) {
        throw ConfigError(cfg.line_of("plan.rho1"), std::string("[plan] ") + ex.what());
    }
    if (cfg.m_max < 1) {
        throw ConfigError(cfg.line_of("plan.m_max"), "plan.m_max must be >= 1");
    }
}

template <typename F>
auto with_line(int line, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &ex) {
        throw ConfigError(line, ex.what());
    }
}

}  // namespace

ConfigError::ConfigError(int line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {
}

std::string_view to_string(DetectorFamily family) {
    switch (family) {
        case DetectorFamily::kNone:
            return "none";
        case DetectorFamily::kCustom:
            return "custom";
        case DetectorFamily::kBinary:
            return "binary";
        case DetectorFamily::kTwoState:
            return "two_state";
        case DetectorFamily::kNState:
            return "n_state";
        case DetectorFamily::kFilter:
            return "filter";
    }
    return "?";
}

int ScenarioConfig::line_of(const std::string &qualified_key) const {
    auto it = key_lines.find(qualified_key);
    if (it != key_lines.end()) {
        return it->second;
    }
    auto section = key_lines.find(qualified_key.substr(0, qualified_key.find('.')));
    return section == key_lines.end() ? 0 : section->second;
}

ScenarioConfig parse_config(std::string_view text) {
    ScenarioConfig cfg;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        line++;
        std::string content = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (content.empty()) {
            continue;
        }
        if (content.front() == '[') {
            if (content.back() != ']') {
                throw ConfigError(line, "malformed section header '" + content + "'");
            }
            section = trim(std::string_view(content).substr(1, content.size() - 2));
            if (!known_keys().contains(section)) {
                throw ConfigError(line, "unknown section [" + section + "]");
            }
            if (cfg.key_lines.contains(section)) {
                throw ConfigError(line, "section [" + section + "] appears twice");
            }
            cfg.key_lines[section] = line;
            continue;
        }
        size_t eq = content.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line, "expected 'key = value', got '" + content + "'");
        }
        if (section.empty()) {
            throw ConfigError(line, "key outside of any [section]");
        }
        std::string key = trim(std::string_view(content).substr(0, eq));
        std::string value = trim(std::string_view(content).substr(eq + 1));
        if (!known_keys().at(section).contains(key)) {
            throw ConfigError(line, "unknown key '" + key + "' in [" + section + "]");
        }
        if (value.empty()) {
            throw ConfigError(line, section + "." + key + ": empty value");
        }
        std::string name = section + "." + key;
        if (cfg.key_lines.contains(name) && !kRepeatable.contains(name)) {
            throw ConfigError(line, name + " set twice (first on line " + std::to_string(cfg.key_lines[name]) + ")");
        }
        cfg.key_lines[name] = line;
        assign(cfg, section, key, value, line);
    }
    check_semantics(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError(0, "cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

int resolved_classical_dim(const ScenarioConfig &cfg) {
    switch (cfg.family) {
        case DetectorFamily::kBinary:
        case DetectorFamily::kFilter:
            return 2;
        case DetectorFamily::kTwoState:
            return 3;
        case DetectorFamily::kNState:
            return static_cast<int>(cfg.projectors.size()) + 1;
        case DetectorFamily::kCustom:
            return cfg.classical_dim;
        case DetectorFamily::kNone:
            if (cfg.classical_dim > 0) {
                return cfg.classical_dim;
            }
            return cfg.classical.empty() ? 2 : static_cast<int>(cfg.classical.size());
    }
    return 2;
}

BinaryDetectorSpec build_binary_spec(const ScenarioConfig &cfg) {
    return with_line(cfg.line_of("detector.family"), [&] {
        BinaryDetectorSpec spec{*cfg.k1, *cfg.k2, Projector::basis(cfg.quantum_dim, cfg.projector)};
        spec.validate();
        return spec;
    });
}

TwoStateDetectorSpec build_two_state_spec(const ScenarioConfig &cfg) {
    return with_line(cfg.line_of("detector.family"), [&] {
        TwoStateDetectorSpec spec{
            *cfg.k1, *cfg.k2, *cfg.n1, *cfg.n2, Projector::basis(cfg.quantum_dim, cfg.e2),
            Projector::basis(cfg.quantum_dim, cfg.e3)};
        spec.validate();
        return spec;
    });
}

NStateDetectorSpec build_n_state_spec(const ScenarioConfig &cfg) {
    return with_line(cfg.line_of("detector.family"), [&] {
        NStateDetectorSpec spec{*cfg.k, {}};
        for (int p : cfg.projectors) {
            spec.projectors.push_back(Projector::basis(cfg.quantum_dim, p));
        }
        spec.validate();
        return spec;
    });
}

FilterSpec build_filter_spec(const ScenarioConfig &cfg) {
    return with_line(cfg.line_of("detector.family"), [&] {
        FilterSpec spec{*cfg.k, Projector::basis(cfg.quantum_dim, cfg.projector)};
        spec.validate();
        return spec;
    });
}

std::vector<CouplingOperator> build_couplings(const ScenarioConfig &cfg) {
    switch (cfg.family) {
        case DetectorFamily::kNone:
            return {};
        case DetectorFamily::kBinary:
            return {binary_coupling(build_binary_spec(cfg))};
        case DetectorFamily::kTwoState:
            return two_state_couplings(build_two_state_spec(cfg));
        case DetectorFamily::kNState:
            return n_state_couplings(build_n_state_spec(cfg));
        case DetectorFamily::kFilter:
            return {filter_coupling(build_filter_spec(cfg))};
        case DetectorFamily::kCustom:
            break;
    }
    int ops = 0;
    for (const auto &e : cfg.entries) {
        ops = std::max(ops, e.op + 1);
    }
    std::vector<CouplingOperator> out(ops, CouplingOperator(cfg.classical_dim, cfg.quantum_dim));
    for (const auto &e : cfg.entries) {
        out[e.op].add_to_block(e.row, e.col, e.coef * basis_operator(cfg.quantum_dim, e.i, e.j));
    }
    return out;
}

DensityBlock build_signal(const ScenarioConfig &cfg) {
    int line = cfg.line_of("signal.weights");
    return with_line(line, [&] {
        QuantumOperator w = QuantumOperator::Zero(cfg.quantum_dim, cfg.quantum_dim);
        if (cfg.weights.empty()) {
            w(0, 0) = 1.0;
        } else {
            for (int i = 0; i < cfg.quantum_dim; i++) {
                w(i, i) = cfg.weights[i];
            }
        }
        for (const auto &o : cfg.offdiag) {
            w(o.i, o.j) = o.value;
            w(o.j, o.i) = std::conj(o.value);
        }
        return DensityBlock(w);
    });
}

ProbabilityVector build_classical(const ScenarioConfig &cfg) {
    return with_line(cfg.line_of("signal.classical"), [&] {
        if (cfg.classical.empty()) {
            return ProbabilityVector::initial(resolved_classical_dim(cfg));
        }
        return ProbabilityVector(cfg.classical);
    });
}

HybridState build_initial_state(const ScenarioConfig &cfg) {
    DensityBlock w = build_signal(cfg);
    ProbabilityVector p = build_classical(cfg);
    return with_line(cfg.line_of("signal.weights"), [&] { return product_state(w, p); });
}

EvolutionConfig build_evolution(const ScenarioConfig &cfg) {
    EvolutionConfig out;
    out.step = cfg.step;
    out.duration = cfg.duration;
    out.record_every = cfg.record_every;
    return out;
}

}  // namespace qclink
