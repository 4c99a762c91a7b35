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

#include "qclink/detectors.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qclink {

namespace {

constexpr double kOrthogonalityTol = 1e-10;

void require_constant(double x, const char *name) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument(std::string(name) + " must be finite and non-negative");
    }
}

void require_time(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("time must be finite and non-negative, got " + std::to_string(t));
    }
}

void require_weights(double a0, double b0) {
    if (!std::isfinite(a0) || !std::isfinite(b0) || a0 < 0.0 || b0 < 0.0 || a0 + b0 > 1.0 + 1e-12) {
        throw std::invalid_argument("signal weights must satisfy a0, b0 >= 0 and a0 + b0 <= 1");
    }
}

/// Aligned fraction transferred after time t by a forward/backward channel pair.
double transferred(double forward, double backward, double t) {
    double f2 = forward * forward;
    double total = f2 + backward * backward;
    return f2 / total * (1.0 - std::exp(-total * t));
}

double limit_fraction(double forward, double backward) {
    double f2 = forward * forward;
    return f2 / (f2 + backward * backward);
}

}  // namespace

void BinaryDetectorSpec::validate() const {
    require_constant(k1, "k1");
    require_constant(k2, "k2");
    if (k1 + k2 <= 0.0) {
        throw std::invalid_argument("binary detector: k1 and k2 cannot both be zero");
    }
}

void SignalDecomposition::validate() const {
    require_weights(a0, b0);
}

CouplingOperator binary_coupling(const BinaryDetectorSpec &spec) {
    spec.validate();
    CouplingOperator v(2, spec.e.dim());
    v.set_block(0, 1, spec.k1 * spec.e.matrix());
    v.set_block(1, 0, spec.k2 * spec.e.matrix());
    return v;
}

BinaryProbabilities binary_asymptotic(const BinaryDetectorSpec &spec, const SignalDecomposition &sig) {
    spec.validate();
    sig.validate();
    double p1 = limit_fraction(spec.k1, spec.k2) * (1.0 - sig.b0);
    return {1.0 - p1, p1};
}

BinaryProbabilities binary_trajectory(const BinaryDetectorSpec &spec, const SignalDecomposition &sig, double t) {
    spec.validate();
    sig.validate();
    require_time(t);
    double p1 = sig.a0 * transferred(spec.k1, spec.k2, t);
    return {sig.a0 + sig.b0 - p1, p1};
}

double balance_residual(const BinaryDetectorSpec &spec, const HybridState &rho) {
    spec.validate();
    if (rho.classical_dim() != 2 || rho.quantum_dim() != spec.e.dim()) {
        throw std::invalid_argument("balance_residual: need a two-event state matching the projector dimension");
    }
    return spec.k2 * spec.k2 * spec.e.expectation(rho.block(1)) - spec.k1 * spec.k1 * spec.e.expectation(rho.block(0));
}

void TwoStateDetectorSpec::validate() const {
    require_constant(k1, "k1");
    require_constant(k2, "k2");
    require_constant(n1, "n1");
    require_constant(n2, "n2");
    if (e2.dim() != e3.dim()) {
        throw std::invalid_argument("two-state detector: projectors must share a dimension");
    }
    if (std::abs((e2.matrix() * e3.matrix()).trace()) > kOrthogonalityTol) {
        throw std::invalid_argument("two-state detector: e2 and e3 must be orthogonal");
    }
    if (k1 + k2 <= 0.0 && n1 + n2 <= 0.0) {
        throw std::invalid_argument("two-state detector: all coupling constants are zero");
    }
}

std::vector<CouplingOperator> two_state_couplings(const TwoStateDetectorSpec &spec) {
    spec.validate();
    int d = spec.e2.dim();
    CouplingOperator v1(3, d);
    v1.set_block(0, 1, spec.k1 * spec.e2.matrix());
    v1.set_block(1, 0, spec.k2 * spec.e2.matrix());
    CouplingOperator v2(3, d);
    v2.set_block(0, 2, spec.n1 * spec.e3.matrix());
    v2.set_block(2, 0, spec.n2 * spec.e3.matrix());
    return {v1, v2};
}

TwoStateProbabilities two_state_trajectory(const TwoStateDetectorSpec &spec, double a0, double b0, double t) {
    spec.validate();
    require_weights(a0, b0);
    require_time(t);
    double p1 = 0.0;
    double p2 = 0.0;
    if (a0 > 0.0) {
        if (spec.k1 + spec.k2 <= 0.0) {
            throw std::invalid_argument("two_state_trajectory: e2 channel carries weight but k1 = k2 = 0");
        }
        p1 = a0 * transferred(spec.k1, spec.k2, t);
    }
    if (b0 > 0.0) {
        if (spec.n1 + spec.n2 <= 0.0) {
            throw std::invalid_argument("two_state_trajectory: e3 channel carries weight but n1 = n2 = 0");
        }
        p2 = b0 * transferred(spec.n1, spec.n2, t);
    }
    return {1.0 - p1 - p2, p1, p2};
}

TwoStateLimit two_state_asymptotic(const TwoStateDetectorSpec &spec, double a0, double b0) {
    spec.validate();
    require_weights(a0, b0);
    TwoStateLimit out{0.0, 0.0, 0.0};
    if (a0 > 0.0) {
        if (spec.k1 + spec.k2 <= 0.0) {
            throw std::invalid_argument("two_state_asymptotic: e2 channel carries weight but k1 = k2 = 0");
        }
        out.p1_inf = a0 * limit_fraction(spec.k1, spec.k2);
    }
    if (b0 > 0.0) {
        if (spec.n1 + spec.n2 <= 0.0) {
            throw std::invalid_argument("two_state_asymptotic: e3 channel carries weight but n1 = n2 = 0");
        }
        out.p2_inf = b0 * limit_fraction(spec.n1, spec.n2);
    }
    out.total_efficiency = out.p1_inf + out.p2_inf;
    return out;
}

double two_state_equal_weight_limit(const TwoStateDetectorSpec &spec) {
    spec.validate();
    double k1 = spec.k1 * spec.k1, k2 = spec.k2 * spec.k2;
    double n1 = spec.n1 * spec.n1, n2 = spec.n2 * spec.n2;
    double denom = n1 * (k1 + k2) + k1 * (n1 + n2);
    if (denom <= 0.0) {
        throw std::invalid_argument("two_state_equal_weight_limit: k1 and n1 must be nonzero");
    }
    return k1 * n1 / denom;
}

void NStateDetectorSpec::validate() const {
    if (!std::isfinite(k) || k <= 0.0) {
        throw std::invalid_argument("n-state detector: k must be positive");
    }
    if (projectors.empty()) {
        throw std::invalid_argument("n-state detector: need at least one projector");
    }
    int d = projectors.front().dim();
    for (size_t i = 0; i < projectors.size(); i++) {
        if (projectors[i].dim() != d) {
            throw std::invalid_argument("n-state detector: projectors must share a dimension");
        }
        for (size_t j = i + 1; j < projectors.size(); j++) {
            if (std::abs((projectors[i].matrix() * projectors[j].matrix()).trace()) > kOrthogonalityTol) {
                throw std::invalid_argument(
                    "n-state detector: projectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " are not orthogonal");
            }
        }
    }
}

std::vector<CouplingOperator> n_state_couplings(const NStateDetectorSpec &spec) {
    spec.validate();
    int n = spec.channels();
    int d = spec.projectors.front().dim();
    double amp = std::sqrt(spec.k);
    std::vector<CouplingOperator> out;
    out.reserve(n);
    for (int i = 1; i <= n; i++) {
        CouplingOperator v(n + 1, d);
        v.set_block(0, i, amp * spec.projectors[i - 1].matrix());
        out.push_back(std::move(v));
    }
    return out;
}

ProbabilityVector n_state_trajectory(const NStateDetectorSpec &spec, int j, double t) {
    spec.validate();
    require_time(t);
    int n = spec.channels();
    if (j < 1 || j > n) {
        throw std::invalid_argument(
            "n_state_trajectory: channel index " + std::to_string(j) + " outside [1, " + std::to_string(n) + "]");
    }
    std::vector<double> p(n + 1, 0.0);
    double remaining = std::exp(-spec.k * t);
    p[0] = remaining;
    p[j] = -std::expm1(-spec.k * t);
    return ProbabilityVector(std::move(p));
}

void FilterSpec::validate() const {
    if (!std::isfinite(k) || k <= 0.0) {
        throw std::invalid_argument("filter: k must be positive");
    }
}

CouplingOperator filter_coupling(const FilterSpec &spec) {
    spec.validate();
    CouplingOperator v(2, spec.e1.dim());
    QuantumOperator blk = std::sqrt(spec.k) * spec.e1.matrix();
    v.set_block(0, 1, blk);
    v.set_block(1, 0, blk);
    return v;
}

DensityBlock filter_quantum_output(const DensityBlock &rho_q, const FilterSpec &spec, double t) {
    spec.validate();
    require_time(t);
    if (rho_q.dim() != spec.e1.dim()) {
        throw std::invalid_argument("filter_quantum_output: dimension mismatch");
    }
    const QuantumOperator &e = spec.e1.matrix();
    const QuantumOperator &r = rho_q.matrix();
    QuantumOperator coherence = anticommutator(e, r) - 2.0 * e * r * e;
    return DensityBlock(r + std::expm1(-0.5 * spec.k * t) * coherence);
}

QuantumOperator filter_weights_output(const QuantumOperator &weights, int aligned, double k, double t) {
    if (!std::isfinite(k) || k <= 0.0) {
        throw std::invalid_argument("filter_weights_output: k must be positive");
    }
    require_time(t);
    if (aligned < 0 || aligned >= weights.rows()) {
        throw std::invalid_argument("filter_weights_output: aligned index out of range");
    }
    // Rejects weights that do not describe a density matrix.
    DensityBlock checked(weights);
    double decay = std::expm1(-0.5 * k * t);
    QuantumOperator out = checked.matrix();
    for (int i = 0; i < out.rows(); i++) {
        for (int j = 0; j < out.cols(); j++) {
            if (i == j) {
                continue;
            }
            int touching = (i == aligned ? 1 : 0) + (j == aligned ? 1 : 0);
            out(i, j) *= 1.0 + touching * decay;
        }
    }
    return out;
}

BinaryProbabilities filter_classical_output(double p0, double p1, double q1, double k, double t) {
    if (!std::isfinite(p0) || !std::isfinite(p1) || p0 < 0.0 || p1 < 0.0 || std::abs(p0 + p1 - 1.0) > 1e-9) {
        throw std::invalid_argument("filter_classical_output: need p0, p1 >= 0 with p0 + p1 = 1");
    }
    if (!std::isfinite(q1) || q1 < 0.0 || q1 > 1.0) {
        throw std::invalid_argument("filter_classical_output: q1 must lie in [0, 1]");
    }
    if (!std::isfinite(k) || k <= 0.0) {
        throw std::invalid_argument("filter_classical_output: k must be positive");
    }
    require_time(t);
    double decay = std::exp(-2.0 * k * t);
    double half_gap = 0.5 * (p0 - p1) * q1;
    return {p0 - half_gap + half_gap * decay, p1 + half_gap - half_gap * decay};
}

}  // namespace qclink
