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

#ifndef QCLINK_CONFIG_H
#define QCLINK_CONFIG_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qclink/detectors.h"
#include "qclink/hybrid_state.h"
#include "qclink/lindblad.h"
#include "qclink/planner.h"

namespace qclink {

/// Parse or semantic error in a scenario file. `line` is 1-based; 0 means
/// the problem is not tied to a single line (e.g. a missing key).
class ConfigError : public std::runtime_error {
   public:
    ConfigError(int line, const std::string &message);
    int line() const {
        return line_;
    }

   private:
    int line_;
};

enum class DetectorFamily { kNone, kCustom, kBinary, kTwoState, kNState, kFilter };

std::string_view to_string(DetectorFamily family);

/// `entry = op,row,col,coef,i,j` adds coef |i><j| to block (row, col) of
/// coupling operator number `op`.
struct CouplingEntry {
    int op;
    int row;
    int col;
    double coef;
    int i;
    int j;
    int line;
};

/// `offdiag = i:j:re[:im]` sets rho_ij and its conjugate rho_ji.
struct OffDiagonalWeight {
    int i;
    int j;
    Complex value;
    int line;
};

struct ScenarioConfig {
    // [detector]
    DetectorFamily family = DetectorFamily::kNone;
    int quantum_dim = 2;
    std::optional<double> k1, k2, n1, n2, k;
    int projector = 0;
    int e2 = 0;
    int e3 = 1;
    std::vector<int> projectors;

    // [coupling]
    int classical_dim = 0;
    std::vector<CouplingEntry> entries;

    // [signal]
    std::vector<double> weights;
    std::vector<OffDiagonalWeight> offdiag;
    std::vector<double> classical;

    // [evolution]
    double step = 1e-3;
    double duration = 1.0;
    int record_every = 1;
    int grid_points = 11;

    // [plan]
    TransmissionScenario plan;
    int m_max = 100;

    /// Line on which each "section.key" was last set.
    std::map<std::string, int> key_lines;

    int line_of(const std::string &qualified_key) const;
};

/// Parses the INI-like scenario format: `[section]` headers, `key = value`
/// lines, `#` comments. Unknown sections and keys are errors.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string &path);

/// Number of classical events implied by the detector family (or declared
/// in [coupling] for custom and none).
int resolved_classical_dim(const ScenarioConfig &cfg);

std::vector<CouplingOperator> build_couplings(const ScenarioConfig &cfg);
DensityBlock build_signal(const ScenarioConfig &cfg);
ProbabilityVector build_classical(const ScenarioConfig &cfg);
HybridState build_initial_state(const ScenarioConfig &cfg);
EvolutionConfig build_evolution(const ScenarioConfig &cfg);

BinaryDetectorSpec build_binary_spec(const ScenarioConfig &cfg);
TwoStateDetectorSpec build_two_state_spec(const ScenarioConfig &cfg);
NStateDetectorSpec build_n_state_spec(const ScenarioConfig &cfg);
FilterSpec build_filter_spec(const ScenarioConfig &cfg);

}  // namespace qclink

#endif
