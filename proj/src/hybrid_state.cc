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

#include "qclink/hybrid_state.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qclink {

namespace {

void require_square(const QuantumOperator &m, const char *what) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square with dimension >= 1");
    }
    if (!all_finite(m)) {
        throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
    }
}

}  // namespace

Projector::Projector(QuantumOperator matrix, const Tolerances &tol) : matrix_(std::move(matrix)) {
    require_square(matrix_, "Projector");
    auto herm = hermiticity_deviation(matrix_);
    if (herm.value > tol.hermitian) {
        throw std::invalid_argument("Projector: not Hermitian (max |e - e^*| = " + std::to_string(herm.value) + ")");
    }
    double idem = max_abs_entry(matrix_ * matrix_ - matrix_);
    if (idem > tol.idempotent) {
        throw std::invalid_argument("Projector: not idempotent (max |ee - e| = " + std::to_string(idem) + ")");
    }
    double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol.idempotent) {
        throw std::invalid_argument("Projector: trace must be 1, got " + std::to_string(tr));
    }
}

Projector Projector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw std::invalid_argument(
            "Projector::basis: index " + std::to_string(index) + " out of range for dimension " + std::to_string(dim));
    }
    QuantumOperator m = QuantumOperator::Zero(dim, dim);
    m(index, index) = 1.0;
    return Projector(std::move(m));
}

Projector Projector::from_vector(const StateVector &v) {
    double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("Projector::from_vector: vector must be nonzero and finite");
    }
    StateVector u = v / n;
    QuantumOperator m = u * u.adjoint();
    return Projector(0.5 * (m + m.adjoint()));
}

Projector Projector::random(int dim, Rng &rng) {
    return from_vector(random_unit_vector(dim, rng));
}

double Projector::expectation(const QuantumOperator &a) const {
    return (matrix_ * a).trace().real();
}

QuantumOperator basis_operator(int dim, int i, int j) {
    if (dim < 1 || i < 0 || j < 0 || i >= dim || j >= dim) {
        throw std::invalid_argument("basis_operator: index out of range");
    }
    QuantumOperator m = QuantumOperator::Zero(dim, dim);
    m(i, j) = 1.0;
    return m;
}

std::vector<Projector> random_orthogonal_projectors(int dim, int count, Rng &rng) {
    if (count < 0 || count > dim) {
        throw std::invalid_argument(
            "random_orthogonal_projectors: need count <= dim (" + std::to_string(count) + " > " +
            std::to_string(dim) + ")");
    }
    QuantumOperator u = random_unitary(dim, rng);
    std::vector<Projector> out;
    out.reserve(count);
    for (int k = 0; k < count; k++) {
        out.push_back(Projector::from_vector(u.col(k)));
    }
    return out;
}

DensityBlock::DensityBlock(QuantumOperator matrix, const Tolerances &tol) : matrix_(std::move(matrix)) {
    require_square(matrix_, "DensityBlock");
    auto herm = hermiticity_deviation(matrix_);
    if (herm.value > tol.hermitian) {
        throw std::invalid_argument("DensityBlock: not Hermitian (max |rho - rho^*| = " + std::to_string(herm.value) + ")");
    }
    double lo = min_hermitian_eigenvalue(matrix_);
    if (lo < -tol.positivity) {
        throw std::invalid_argument("DensityBlock: not positive semidefinite (min eigenvalue " + std::to_string(lo) + ")");
    }
    double tr = trace();
    if (tr < -tol.trace || tr > 1.0 + tol.trace) {
        throw std::invalid_argument("DensityBlock: trace " + std::to_string(tr) + " outside [0, 1]");
    }
}

DensityBlock DensityBlock::pure(const StateVector &v) {
    return DensityBlock(Projector::from_vector(v).matrix());
}

DensityBlock DensityBlock::maximally_mixed(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("DensityBlock::maximally_mixed: dimension must be positive");
    }
    return DensityBlock(QuantumOperator::Identity(dim, dim) / static_cast<double>(dim));
}

ProbabilityVector::ProbabilityVector(std::vector<double> p, const Tolerances &tol) : p_(std::move(p)) {
    if (p_.empty()) {
        throw std::invalid_argument("ProbabilityVector: empty");
    }
    double sum = 0.0;
    for (double x : p_) {
        if (!std::isfinite(x) || x < -tol.trace) {
            throw std::invalid_argument("ProbabilityVector: entries must be finite and non-negative");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol.trace) {
        throw std::invalid_argument("ProbabilityVector: entries sum to " + std::to_string(sum) + ", expected 1");
    }
}

ProbabilityVector ProbabilityVector::initial(int classical_dim) {
    if (classical_dim < 1) {
        throw std::invalid_argument("ProbabilityVector::initial: dimension must be positive");
    }
    std::vector<double> p(classical_dim, 0.0);
    p[0] = 1.0;
    return ProbabilityVector(std::move(p));
}

HybridState::HybridState(std::vector<QuantumOperator> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw std::invalid_argument("HybridState: need at least one block");
    }
    auto d = blocks_.front().rows();
    for (const auto &b : blocks_) {
        if (b.rows() < 1 || b.rows() != d || b.cols() != d) {
            throw std::invalid_argument("HybridState: all blocks must be square with equal dimension");
        }
    }
}

HybridState HybridState::zero(int classical_dim, int quantum_dim) {
    if (classical_dim < 1 || quantum_dim < 1) {
        throw std::invalid_argument("HybridState::zero: dimensions must be positive");
    }
    return HybridState(std::vector<QuantumOperator>(classical_dim, QuantumOperator::Zero(quantum_dim, quantum_dim)));
}

std::vector<double> HybridState::block_traces() const {
    std::vector<double> out;
    out.reserve(blocks_.size());
    for (const auto &b : blocks_) {
        out.push_back(b.trace().real());
    }
    return out;
}

QuantumOperator HybridState::to_full() const {
    int d = quantum_dim();
    int n = classical_dim();
    QuantumOperator full = QuantumOperator::Zero(n * d, n * d);
    for (int a = 0; a < n; a++) {
        full.block(a * d, a * d, d, d) = blocks_[a];
    }
    return full;
}

bool StateReport::ok() const {
    return trace_ok && std::all_of(blocks.begin(), blocks.end(), [](const BlockReport &b) { return b.ok(); });
}

double StateReport::min_eigenvalue() const {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto &b : blocks) {
        lo = std::min(lo, b.min_eigenvalue);
    }
    return lo;
}

std::string StateReport::summary() const {
    std::ostringstream out;
    out << "total trace " << total_trace << " (deviation " << trace_deviation << (trace_ok ? ", ok" : ", FLAGGED")
        << ")";
    for (size_t a = 0; a < blocks.size(); a++) {
        const auto &b = blocks[a];
        if (b.ok()) {
            continue;
        }
        out << "; block " << a << ":";
        if (!b.finite) {
            out << " non-finite entries";
        }
        if (!b.hermitian_ok) {
            out << " non-Hermitian (max |rho - rho^*| = " << b.hermiticity.value << " at (" << b.hermiticity.row
                << "," << b.hermiticity.col << "))";
        }
        if (!b.positive_ok) {
            out << " min eigenvalue " << b.min_eigenvalue;
        }
        if (!b.trace_range_ok) {
            out << " trace " << b.trace << " outside [0,1]";
        }
    }
    return out.str();
}

StateReport validate_state(const HybridState &rho, const Tolerances &tol) {
    StateReport report;
    for (const auto &block : rho.blocks()) {
        BlockReport b;
        b.finite = all_finite(block);
        if (b.finite) {
            b.hermiticity = hermiticity_deviation(block);
            b.min_eigenvalue = min_hermitian_eigenvalue(block);
        } else {
            b.hermiticity.value = std::numeric_limits<double>::infinity();
            b.min_eigenvalue = -std::numeric_limits<double>::infinity();
        }
        b.trace = block.trace().real();
        b.hermitian_ok = b.finite && b.hermiticity.value <= tol.hermitian;
        b.positive_ok = b.finite && b.min_eigenvalue >= -tol.positivity;
        b.trace_range_ok = b.finite && b.trace >= -tol.trace && b.trace <= 1.0 + tol.trace;
        report.total_trace += b.trace;
        report.blocks.push_back(b);
    }
    report.trace_deviation = std::abs(report.total_trace - 1.0);
    report.trace_ok = report.trace_deviation <= tol.trace;
    return report;
}

void require_valid(const HybridState &rho, const Tolerances &tol) {
    auto report = validate_state(rho, tol);
    if (!report.ok()) {
        throw std::invalid_argument("invalid hybrid state: " + report.summary());
    }
}

HybridState product_state(const DensityBlock &w, const ProbabilityVector &p, const Tolerances &tol) {
    if (std::abs(w.trace() - 1.0) > tol.trace) {
        throw std::invalid_argument("product_state: quantum state must have unit trace, got " + std::to_string(w.trace()));
    }
    std::vector<QuantumOperator> blocks;
    blocks.reserve(p.size());
    for (double pa : p.values()) {
        blocks.push_back(pa * w.matrix());
    }
    return HybridState(std::move(blocks));
}

DensityBlock quantum_marginal(const HybridState &rho, const Tolerances &tol) {
    require_valid(rho, tol);
    QuantumOperator sum = QuantumOperator::Zero(rho.quantum_dim(), rho.quantum_dim());
    for (const auto &b : rho.blocks()) {
        sum += b;
    }
    return DensityBlock(std::move(sum), tol);
}

ProbabilityVector classical_marginal(const HybridState &rho, const Tolerances &tol) {
    require_valid(rho, tol);
    auto traces = rho.block_traces();
    // Clamp rounding-level negatives so the result is a proper distribution.
    for (auto &t : traces) {
        t = std::max(t, 0.0);
    }
    return ProbabilityVector(std::move(traces), tol);
}

}  // namespace qclink
