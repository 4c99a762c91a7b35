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

#include "qclink/planner.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qclink {

namespace {

constexpr double kSnap = 1e-9;
constexpr double kWidthSlack = 1e-12;
constexpr int kExactBinomialMax = 64;

double snap_to_integer(double x) {
    double r = std::round(x);
    return std::abs(x - r) <= kSnap * std::max(1.0, std::abs(x)) ? r : x;
}

/// log C(m, i); exact integer arithmetic for m <= 64, log-gamma beyond.
double log_binomial(int m, int i) {
    if (m <= kExactBinomialMax) {
        unsigned __int128 c = 1;
        int k = std::min(i, m - i);
        for (int j = 1; j <= k; j++) {
            c = c * static_cast<unsigned>(m - k + j) / static_cast<unsigned>(j);
        }
        return std::log(static_cast<double>(c));
    }
    return std::lgamma(m + 1.0) - std::lgamma(i + 1.0) - std::lgamma(m - i + 1.0);
}

}  // namespace

void TransmissionScenario::validate() const {
    auto in_unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
    if (!in_unit(rho1)) {
        throw std::invalid_argument("scenario: rho1 must lie in [0, 1]");
    }
    if (!in_unit(eta_det)) {
        throw std::invalid_argument("scenario: detector efficiency must lie in [0, 1]");
    }
    if (!std::isfinite(accuracy) || accuracy <= 0.0) {
        throw std::invalid_argument("scenario: accuracy must be positive");
    }
    if (rho1 - accuracy < -1e-12 || rho1 + accuracy > 1.0 + 1e-12) {
        throw std::invalid_argument("scenario: decoding interval (rho1 - a, rho1 + a) must lie inside [0, 1]");
    }
    double mg = effective_margin();
    if (!std::isfinite(mg) || mg < 0.0 || mg > accuracy + 1e-12) {
        throw std::invalid_argument("scenario: margin must lie in [0, accuracy]");
    }
    if (!std::isfinite(confidence_target) || confidence_target <= 0.0 || confidence_target >= 1.0) {
        throw std::invalid_argument("scenario: confidence target must lie in (0, 1)");
    }
}

double filter_registration_probability(double k, double t0, std::optional<double> rho1) {
    if (!std::isfinite(k) || k <= 0.0 || !std::isfinite(t0) || t0 < 0.0) {
        throw std::invalid_argument("filter_registration_probability: need k > 0 and t0 >= 0");
    }
    double p = -0.5 * std::expm1(-2.0 * k * t0);
    if (rho1) {
        if (*rho1 < 0.0 || *rho1 > 1.0) {
            throw std::invalid_argument("filter_registration_probability: rho1 must lie in [0, 1]");
        }
        p *= *rho1;
    }
    return p;
}

int di_confirmation_count(double p_reg, double confidence_target) {
    if (!std::isfinite(p_reg) || p_reg < 0.0 || p_reg > 1.0) {
        throw std::invalid_argument("di_confirmation_count: p_reg must lie in [0, 1]");
    }
    if (!std::isfinite(confidence_target) || confidence_target <= 0.0 || confidence_target >= 1.0) {
        throw std::invalid_argument("di_confirmation_count: confidence target must lie in (0, 1)");
    }
    if (p_reg == 1.0) {
        return 1;
    }
    if (p_reg == 0.0) {
        throw std::invalid_argument("di_confirmation_count: p_reg = 0, the signal is never registered");
    }
    double miss = 1.0 - p_reg;
    double allowed = 1.0 - confidence_target;
    auto estimate = static_cast<long>(std::ceil(std::log(allowed) / std::log(miss)));
    long n = std::max(1L, estimate);
    while (n > 1 && std::pow(miss, n - 1) <= allowed) {
        n--;
    }
    while (std::pow(miss, n) > allowed) {
        n++;
    }
    if (n > std::numeric_limits<int>::max()) {
        throw std::overflow_error("di_confirmation_count: required count does not fit in int");
    }
    return static_cast<int>(n);
}

std::pair<double, double> interval_expectations(int m, const TransmissionScenario &scenario) {
    if (m < 1) {
        throw std::invalid_argument("interval_expectations: m must be >= 1");
    }
    scenario.validate();
    double center = m * scenario.success_probability();
    double half = scenario.effective_margin() * m;
    return {center - half, center + half};
}

int minimal_m(const TransmissionScenario &scenario) {
    scenario.validate();
    double mg = scenario.effective_margin();
    if (mg <= 0.0) {
        throw std::invalid_argument("minimal_m: margin must be positive");
    }
    auto width = [&](long m) {
        auto [lo, hi] = interval_expectations(static_cast<int>(m), scenario);
        return hi - lo;
    };
    long m = std::max(1L, static_cast<long>(std::ceil(1.0 / (2.0 * mg))));
    while (m > 1 && width(m - 1) >= 1.0 - kWidthSlack) {
        m--;
    }
    while (width(m) < 1.0 - kWidthSlack) {
        m++;
    }
    return static_cast<int>(m);
}

IntegerRange advantageous_set(int m, const TransmissionScenario &scenario) {
    auto [lo, hi] = interval_expectations(m, scenario);
    IntegerRange out;
    out.lo = std::max(0L, static_cast<long>(std::ceil(snap_to_integer(lo))));
    out.hi = std::min(static_cast<long>(m), static_cast<long>(std::floor(snap_to_integer(hi))));
    return out;
}

double confidence(int m, double p, const IntegerRange &set) {
    if (m < 0) {
        throw std::invalid_argument("confidence: m must be non-negative");
    }
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw std::invalid_argument("confidence: p must lie in [0, 1]");
    }
    long lo = std::max(0L, set.lo);
    long hi = std::min(static_cast<long>(m), set.hi);
    if (lo > hi) {
        return 0.0;
    }
    if (p == 0.0) {
        return lo == 0 ? 1.0 : 0.0;
    }
    if (p == 1.0) {
        return hi == m ? 1.0 : 0.0;
    }
    double log_p = std::log(p);
    double log_q = std::log1p(-p);
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(hi - lo + 1));
    for (long i = lo; i <= hi; i++) {
        terms.push_back(log_binomial(m, static_cast<int>(i)) + i * log_p + (m - i) * log_q);
    }
    double peak = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) {
        sum += std::exp(t - peak);
    }
    return std::clamp(std::exp(peak) * sum, 0.0, 1.0);
}

PlanResult plan_for(int m, const TransmissionScenario &scenario) {
    PlanResult r;
    r.m = m;
    std::tie(r.i_minus, r.i_plus) = interval_expectations(m, scenario);
    r.advantageous = advantageous_set(m, scenario);
    r.confidence = confidence(m, scenario.success_probability(), r.advantageous);
    return r;
}

PlanScan scan_plan(const TransmissionScenario &scenario, int m_max) {
    int start = minimal_m(scenario);
    if (m_max < start) {
        throw std::invalid_argument(
            "scan_plan: m_max (" + std::to_string(m_max) + ") is below the minimal m (" + std::to_string(start) + ")");
    }
    PlanScan scan;
    scan.rows.reserve(static_cast<size_t>(m_max - start + 1));
    for (int m = start; m <= m_max; m++) {
        scan.rows.push_back(plan_for(m, scenario));
        if (!scan.first_passing && scan.rows.back().confidence >= scenario.confidence_target) {
            scan.first_passing = m;
        }
    }
    return scan;
}

std::vector<Descent> detect_nonmonotonicity(const TransmissionScenario &scenario, int m_lo, int m_hi) {
    if (m_lo < 1 || m_hi < m_lo) {
        throw std::invalid_argument("detect_nonmonotonicity: need 1 <= m_lo <= m_hi");
    }
    std::vector<double> conf;
    conf.reserve(static_cast<size_t>(m_hi - m_lo + 1));
    for (int m = m_lo; m <= m_hi; m++) {
        conf.push_back(plan_for(m, scenario).confidence);
    }
    std::vector<Descent> out;
    for (size_t a = 0; a < conf.size(); a++) {
        for (size_t b = a + 1; b < conf.size(); b++) {
            if (conf[b] < conf[a]) {
                out.push_back({m_lo + static_cast<int>(a), m_lo + static_cast<int>(b), conf[a], conf[b]});
            }
        }
    }
    return out;
}

double transmission_speed(long bits, double seconds) {
    if (bits < 0) {
        throw std::invalid_argument("transmission_speed: bit count must be non-negative");
    }
    if (!std::isfinite(seconds) || seconds <= 0.0) {
        throw std::invalid_argument("transmission_speed: duration must be positive");
    }
    return static_cast<double>(bits) / seconds;
}

double intelligibility(const std::vector<bool> &sent, const std::vector<bool> &received) {
    if (sent.size() != received.size()) {
        throw std::invalid_argument("intelligibility: sequences differ in length");
    }
    if (sent.empty()) {
        throw std::invalid_argument("intelligibility: empty signal");
    }
    size_t differing = 0;
    for (size_t k = 0; k < sent.size(); k++) {
        differing += sent[k] != received[k] ? 1 : 0;
    }
    return static_cast<double>(differing) / static_cast<double>(sent.size());
}

std::vector<bool> parse_bits(std::string_view text) {
    std::vector<bool> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("parse_bits: expected only '0' and '1'");
        }
        out.push_back(c == '1');
    }
    return out;
}

}  // namespace qclink
