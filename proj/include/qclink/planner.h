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

#ifndef QCLINK_PLANNER_H
#define QCLINK_PLANNER_H

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qclink {

/// Planning inputs for a sender -> filter (D I) -> receiver (D II) link.
struct TransmissionScenario {
    /// Signal weight on the code projector.
    double rho1 = 0.8;
    /// Detector efficiency factor 1 - exp(-n^2 t0).
    double eta_det = 0.9;
    /// Half-width a of the decoding interval (rho1 - a, rho1 + a).
    double accuracy = 0.05;
    /// Half-width applied to expected counts per state; unset means eta_det * accuracy.
    std::optional<double> margin;
    double confidence_target = 0.9;

    double effective_margin() const {
        return margin.value_or(eta_det * accuracy);
    }
    /// Per-state registration probability at the receiver, eta_det * rho1.
    double success_probability() const {
        return eta_det * rho1;
    }
    void validate() const;
};

/// Closed integer range [lo, hi]; empty when lo > hi.
struct IntegerRange {
    long lo = 0;
    long hi = -1;

    bool empty() const {
        return lo > hi;
    }
    long size() const {
        return empty() ? 0 : hi - lo + 1;
    }
    bool contains(long i) const {
        return i >= lo && i <= hi;
    }
    bool operator==(const IntegerRange &) const = default;
};

struct PlanResult {
    int m = 0;
    double i_minus = 0.0;
    double i_plus = 0.0;
    IntegerRange advantageous;
    double confidence = 0.0;
};

struct PlanScan {
    std::vector<PlanResult> rows;
    /// First m whose confidence reaches the scenario's target.
    std::optional<int> first_passing;
};

/// Registration probability of the filter for one state,
/// 1/2 (1 - exp(-2 k t0)), optionally times the signal weight rho1.
double filter_registration_probability(double k, double t0, std::optional<double> rho1 = std::nullopt);

/// Smallest n with (1 - p_reg)^n <= 1 - confidence_target. Returns 1 for
/// p_reg = 1; throws for p_reg = 0 (no number of states suffices).
int di_confirmation_count(double p_reg, double confidence_target);

/// (m p - margin m, m p + margin m) with p = eta_det * rho1.
std::pair<double, double> interval_expectations(int m, const TransmissionScenario &scenario);

/// Smallest m with i_plus - i_minus >= 1, i.e. m >= 1 / (2 margin).
int minimal_m(const TransmissionScenario &scenario);

/// {ceil(i_minus), ..., floor(i_plus)} intersected with [0, m]. Endpoints
/// within 1e-9 of an integer snap to it and are included.
IntegerRange advantageous_set(int m, const TransmissionScenario &scenario);

/// sum_{i in set} C(m, i) p^i (1-p)^(m-i), accumulated in the log domain.
double confidence(int m, double p, const IntegerRange &set);

PlanResult plan_for(int m, const TransmissionScenario &scenario);

/// PlanResult for every m in [minimal_m, m_max].
PlanScan scan_plan(const TransmissionScenario &scenario, int m_max);

struct Descent {
    int m;
    int later_m;
    double confidence;
    double later_confidence;
};

/// Every pair m < m' in [m_lo, m_hi] with confidence(m') < confidence(m).
std::vector<Descent> detect_nonmonotonicity(const TransmissionScenario &scenario, int m_lo, int m_hi);

/// Bits per second.
double transmission_speed(long bits, double seconds);

/// Fraction of positions where the sent and decoded bit sequences differ.
double intelligibility(const std::vector<bool> &sent, const std::vector<bool> &received);

/// "1010" -> {1, 0, 1, 0}.
std::vector<bool> parse_bits(std::string_view text);

}  // namespace qclink

#endif
