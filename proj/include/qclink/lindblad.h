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

#ifndef QCLINK_LINDBLAD_H
#define QCLINK_LINDBLAD_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclink/hybrid_state.h"

namespace qclink {

/// Block operator V over classical index pairs. Block (alpha, beta) is a
/// quantum operator; V need not be block-diagonal.
class CouplingOperator {
   public:
    CouplingOperator(int classical_dim, int quantum_dim);

    int classical_dim() const {
        return classical_dim_;
    }
    int quantum_dim() const {
        return quantum_dim_;
    }
    const QuantumOperator &block(int row, int col) const;
    void set_block(int row, int col, QuantumOperator value);
    /// Adds to an existing block.
    void add_to_block(int row, int col, const QuantumOperator &value);

    QuantumOperator full() const;

   private:
    int classical_dim_;
    int quantum_dim_;
    std::vector<QuantumOperator> blocks_;  // row-major
};

/// Block-diagonal Hermitian Hamiltonian H = diag(H_0, ..., H_n).
class Hamiltonian {
   public:
    explicit Hamiltonian(std::vector<QuantumOperator> blocks, const Tolerances &tol = {});

    static Hamiltonian zero(int classical_dim, int quantum_dim);

    int classical_dim() const {
        return static_cast<int>(blocks_.size());
    }
    int quantum_dim() const {
        return static_cast<int>(blocks_.front().rows());
    }
    const QuantumOperator &block(int alpha) const {
        return blocks_.at(alpha);
    }
    bool is_zero() const;

   private:
    std::vector<QuantumOperator> blocks_;
};

struct EvolutionConfig {
    double step = 1e-3;
    double duration = 1.0;
    int record_every = 1;
    Tolerances tolerances;
    /// Largest accepted |sum_alpha Tr rho_alpha(t) - 1| along the trajectory.
    double trace_drift_limit = 1e-8;
    /// Random probes added to the initial state for the pre-flight CP check.
    int cp_random_probes = 4;
    std::uint64_t cp_seed = 7;
};

struct TrajectoryPoint {
    double t;
    HybridState state;
    double trace_drift;
    double min_eigenvalue;
};

using Trajectory = std::vector<TrajectoryPoint>;

/// Raised when the integrator leaves the region where the numerical guards hold.
class NumericalGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised when coupling operators do not map block-diagonal states into
/// block-diagonal states.
class CpConditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Full block-matrix derivative
///   -i[H, rho] + sum_i V_i^* rho V_i - 1/2 {sum_i V_i V_i^*, rho}
/// assembled on the ((n+1)d)-dimensional space. Off-diagonal blocks vanish
/// exactly when the couplings satisfy the CP structural conditions.
QuantumOperator liouville_rhs(
    const HybridState &rho, const Hamiltonian &h, std::span<const CouplingOperator> couplings);

/// Diagonal blocks of the same derivative, evaluated block by block.
std::vector<QuantumOperator> liouville_rhs_blocks(
    const HybridState &rho, const Hamiltonian &h, std::span<const CouplingOperator> couplings);

struct CpViolation {
    int coupling = -1;   // index into the coupling list; -1 for the summed V V^*
    int probe = -1;      // -1 for the V V^* condition
    int row = 0;
    int col = 0;
    double norm = 0.0;   // Frobenius norm of the offending off-diagonal block
};

struct CpReport {
    std::vector<CpViolation> violations;
    int probes_checked = 0;
    double max_offdiagonal_norm = 0.0;

    bool ok() const {
        return violations.empty();
    }
    std::string summary() const;
};

struct CpCheckOptions {
    int random_probes = 8;
    std::uint64_t seed = 20260101;
    double threshold = 1e-10;
};

/// Checks that sum_i V_i V_i^* is block-diagonal and that V_i^* A V_i is
/// block-diagonal for every probe A (the supplied states plus random
/// block-diagonal operators).
CpReport check_cp_conditions(
    std::span<const CouplingOperator> couplings,
    std::span<const HybridState> probes,
    const CpCheckOptions &options = {});

/// dp_beta/dt = sum_i [ sum_alpha Tr(V_ab^* rho_alpha V_ab) - Tr((V V^*)_bb rho_beta) ].
std::vector<double> classical_rate_equations(const HybridState &rho, std::span<const CouplingOperator> couplings);

/// Fixed-step RK4 integration of the diagonal blocks. The first point is rho0
/// and the last point is at t = duration.
Trajectory evolve(
    const HybridState &rho0,
    const Hamiltonian &h,
    std::span<const CouplingOperator> couplings,
    const EvolutionConfig &cfg);

/// Columns: t, p_0..p_n, trace_drift, min_eigenvalue.
void write_trajectory_csv(std::ostream &out, const Trajectory &trajectory);

}  // namespace qclink

#endif
