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

#ifndef QCLINK_HYBRID_STATE_H
#define QCLINK_HYBRID_STATE_H

#include <string>
#include <vector>

#include "qclink/linalg.h"

namespace qclink {

/// Numerical tolerances shared by the state checks.
struct Tolerances {
    double hermitian = 1e-10;
    double idempotent = 1e-10;
    /// Smallest eigenvalue accepted is -positivity.
    double positivity = 1e-9;
    double trace = 1e-9;
};

/// Rank-one orthogonal projector e with e = e^* = e e and Tr e = 1.
class Projector {
   public:
    explicit Projector(QuantumOperator matrix, const Tolerances &tol = {});

    /// |index><index| in the computational basis.
    static Projector basis(int dim, int index);
    /// |v><v| / <v|v>.
    static Projector from_vector(const StateVector &v);
    static Projector random(int dim, Rng &rng);

    int dim() const {
        return static_cast<int>(matrix_.rows());
    }
    const QuantumOperator &matrix() const {
        return matrix_;
    }
    /// Tr(e a).
    double expectation(const QuantumOperator &a) const;

   private:
    QuantumOperator matrix_;
};

/// Unnormalized basis element e_ij = |i><j|, used for off-diagonal weights.
/// Not a projector unless i == j.
QuantumOperator basis_operator(int dim, int i, int j);

/// `count` mutually orthogonal rank-one projectors drawn from one random basis.
std::vector<Projector> random_orthogonal_projectors(int dim, int count, Rng &rng);

/// Hermitian, positive semidefinite block with 0 <= trace <= 1.
class DensityBlock {
   public:
    explicit DensityBlock(QuantumOperator matrix, const Tolerances &tol = {});

    static DensityBlock pure(const StateVector &v);
    static DensityBlock maximally_mixed(int dim);

    int dim() const {
        return static_cast<int>(matrix_.rows());
    }
    double trace() const {
        return matrix_.trace().real();
    }
    const QuantumOperator &matrix() const {
        return matrix_;
    }

   private:
    QuantumOperator matrix_;
};

/// Classical distribution over the n+1 detector events.
class ProbabilityVector {
   public:
    explicit ProbabilityVector(std::vector<double> p, const Tolerances &tol = {});

    /// (1, 0, ..., 0): the detector starts in its ground event.
    static ProbabilityVector initial(int classical_dim);

    int size() const {
        return static_cast<int>(p_.size());
    }
    double operator[](int i) const {
        return p_.at(i);
    }
    const std::vector<double> &values() const {
        return p_;
    }

   private:
    std::vector<double> p_;
};

/// Block-diagonal state diag(rho_0, ..., rho_n) of the joint quantum-classical
/// algebra. Construction only checks shapes; use validate_state for physics.
class HybridState {
   public:
    explicit HybridState(std::vector<QuantumOperator> blocks);

    static HybridState zero(int classical_dim, int quantum_dim);

    int classical_dim() const {
        return static_cast<int>(blocks_.size());
    }
    int quantum_dim() const {
        return static_cast<int>(blocks_.front().rows());
    }
    const QuantumOperator &block(int alpha) const {
        return blocks_.at(alpha);
    }
    const std::vector<QuantumOperator> &blocks() const {
        return blocks_;
    }
    std::vector<double> block_traces() const;

    /// Assembled ((n+1)d) x ((n+1)d) block-diagonal matrix.
    QuantumOperator to_full() const;

   private:
    std::vector<QuantumOperator> blocks_;
};

struct BlockReport {
    EntryDeviation hermiticity;
    double min_eigenvalue = 0.0;
    double trace = 0.0;
    bool finite = true;
    bool hermitian_ok = true;
    bool positive_ok = true;
    bool trace_range_ok = true;

    bool ok() const {
        return finite && hermitian_ok && positive_ok && trace_range_ok;
    }
};

struct StateReport {
    std::vector<BlockReport> blocks;
    double total_trace = 0.0;
    double trace_deviation = 0.0;
    bool trace_ok = true;

    bool ok() const;
    double min_eigenvalue() const;
    std::string summary() const;
};

StateReport validate_state(const HybridState &rho, const Tolerances &tol = {});

/// Throws std::invalid_argument carrying the report summary if rho is invalid.
void require_valid(const HybridState &rho, const Tolerances &tol = {});

/// w (x) P = diag(p_0 w, ..., p_n w).
HybridState product_state(const DensityBlock &w, const ProbabilityVector &p, const Tolerances &tol = {});

/// Sum of the blocks: the reduced state of the quantum subsystem.
DensityBlock quantum_marginal(const HybridState &rho, const Tolerances &tol = {});

/// Block traces: the reduced state of the classical subsystem.
ProbabilityVector classical_marginal(const HybridState &rho, const Tolerances &tol = {});

}  // namespace qclink

#endif
