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

#ifndef QCLINK_DETECTORS_H
#define QCLINK_DETECTORS_H

#include <vector>

#include "qclink/hybrid_state.h"
#include "qclink/lindblad.h"

namespace qclink {

// Closed-form solutions for the four detector families. Every family also
// has a coupling-operator builder so the same configuration can be run
// through evolve() and compared.

/// Yes/no detector with V = [[0, k1 e], [k2 e, 0]]. k1 drives 0 -> 1 and
/// k2 drives 1 -> 0; both have units of sqrt(rate).
struct BinaryDetectorSpec {
    double k1;
    double k2;
    Projector e;

    void validate() const;
};

/// Initial split of the signal: weight a0 = Tr(e rho_q) aligned with the
/// detector projector, weight b0 orthogonal to it.
struct SignalDecomposition {
    double a0;
    double b0;

    void validate() const;
};

struct BinaryProbabilities {
    double p0;
    double p1;
};

CouplingOperator binary_coupling(const BinaryDetectorSpec &spec);

/// p1(inf) = k1^2 / (k1^2 + k2^2) * (1 - b0), p0(inf) = 1 - p1(inf).
BinaryProbabilities binary_asymptotic(const BinaryDetectorSpec &spec, const SignalDecomposition &sig);

/// p1(t) = a0 k1^2/(k1^2+k2^2) (1 - exp(-(k1^2+k2^2) t)), p0(t) = a0 + b0 - p1(t).
BinaryProbabilities binary_trajectory(const BinaryDetectorSpec &spec, const SignalDecomposition &sig, double t);

/// k2^2 Tr(e rho_1) - k1^2 Tr(e rho_0); zero once the flows balance.
double balance_residual(const BinaryDetectorSpec &spec, const HybridState &rho);

/// Two-state detector: V1 couples events 0 <-> 1 through e2 (k1 forward,
/// k2 back) and V2 couples 0 <-> 2 through e3 (n1 forward, n2 back).
struct TwoStateDetectorSpec {
    double k1;
    double k2;
    double n1;
    double n2;
    Projector e2;
    Projector e3;

    void validate() const;
};

struct TwoStateProbabilities {
    double p0;
    double p1;
    double p2;
};

struct TwoStateLimit {
    double p1_inf;
    double p2_inf;
    double total_efficiency;
};

std::vector<CouplingOperator> two_state_couplings(const TwoStateDetectorSpec &spec);

/// a0 is the initial weight on e2, b0 on e3; the remainder is inert and
/// stays in event 0.
TwoStateProbabilities two_state_trajectory(const TwoStateDetectorSpec &spec, double a0, double b0, double t);

TwoStateLimit two_state_asymptotic(const TwoStateDetectorSpec &spec, double a0, double b0);

/// Common limit p1 = p2 = k1^2 n1^2 / (n1^2 (k1^2 + k2^2) + k1^2 (n1^2 + n2^2))
/// quoted for an unspecified "equal weight" signal. Informational only; it
/// equals 1/2 when k2 = n2 = 0.
double two_state_equal_weight_limit(const TwoStateDetectorSpec &spec);

/// n-channel detector: V_i = sqrt(k) |0><i| (x) e_i, i = 1..n.
struct NStateDetectorSpec {
    double k;
    std::vector<Projector> projectors;

    int channels() const {
        return static_cast<int>(projectors.size());
    }
    void validate() const;
};

std::vector<CouplingOperator> n_state_couplings(const NStateDetectorSpec &spec);

/// Signal fully aligned with e_j (1 <= j <= n): p0 = exp(-kt),
/// p_j = 1 - exp(-kt), all other events stay empty.
ProbabilityVector n_state_trajectory(const NStateDetectorSpec &spec, int j, double t);

/// Nondemolition filter V = sqrt(k) [[0, e1], [e1, 0]].
struct FilterSpec {
    double k;
    Projector e1;

    void validate() const;
};

CouplingOperator filter_coupling(const FilterSpec &spec);

/// Quantum marginal after time t:
///   rho_q(t) = rho_q + (exp(-kt/2) - 1) ({e1, rho_q} - 2 e1 rho_q e1).
/// Coherences between e1 and its complement decay; everything else passes.
DensityBlock filter_quantum_output(const DensityBlock &rho_q, const FilterSpec &spec, double t);

/// Same map in weight form: `weights` holds rho_i on the diagonal and rho_ij
/// off it, in a basis whose element `aligned` spans e1. Entry (i, j) is
/// scaled by 1 + (delta_i,aligned + delta_j,aligned)(exp(-kt/2) - 1).
QuantumOperator filter_weights_output(const QuantumOperator &weights, int aligned, double k, double t);

/// Classical output of the filter for an initial product state with
/// distribution (p0, p1) and aligned weight q1 = Tr(e1 rho_q).
BinaryProbabilities filter_classical_output(double p0, double p1, double q1, double k, double t);

}  // namespace qclink

#endif
