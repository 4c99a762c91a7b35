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

#include "qclink/lindblad.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qclink {

namespace {

constexpr Complex kI(0.0, 1.0);

void check_dims(const HybridState &rho, const Hamiltonian &h, std::span<const CouplingOperator> couplings) {
    if (h.classical_dim() != rho.classical_dim() || h.quantum_dim() != rho.quantum_dim()) {
        throw std::invalid_argument("dimension mismatch between state and Hamiltonian");
    }
    for (const auto &v : couplings) {
        if (v.classical_dim() != rho.classical_dim() || v.quantum_dim() != rho.quantum_dim()) {
            throw std::invalid_argument(
                "dimension mismatch between state (" + std::to_string(rho.classical_dim()) + "x" +
                std::to_string(rho.quantum_dim()) + ") and coupling operator (" + std::to_string(v.classical_dim()) +
                "x" + std::to_string(v.quantum_dim()) + ")");
        }
    }
}

struct NonzeroBlock {
    int row;
    int col;
    QuantumOperator value;
    QuantumOperator adjoint;
};

/// Couplings flattened to their nonzero blocks plus the diagonal blocks of
/// sum_i V_i V_i^*.
struct Generator {
    std::vector<NonzeroBlock> jumps;
    std::vector<QuantumOperator> damping;

    Generator(int n, int d, std::span<const CouplingOperator> couplings)
        : damping(n, QuantumOperator::Zero(d, d)) {
        for (const auto &v : couplings) {
            for (int a = 0; a < n; a++) {
                for (int b = 0; b < n; b++) {
                    const auto &blk = v.block(a, b);
                    if (max_abs_entry(blk) == 0.0) {
                        continue;
                    }
                    jumps.push_back({a, b, blk, blk.adjoint()});
                    damping[a] += blk * blk.adjoint();
                }
            }
        }
    }

    void apply(const Hamiltonian &h, const std::vector<QuantumOperator> &rho, std::vector<QuantumOperator> &out) const {
        int n = static_cast<int>(rho.size());
        for (int b = 0; b < n; b++) {
            out[b] = -0.5 * anticommutator(damping[b], rho[b]);
            if (!h.is_zero()) {
                out[b] -= kI * commutator(h.block(b), rho[b]);
            }
        }
        for (const auto &j : jumps) {
            out[j.col] += j.adjoint * rho[j.row] * j.value;
        }
    }
};

QuantumOperator offdiagonal_block(const QuantumOperator &full, int d, int row, int col) {
    return full.block(row * d, col * d, d, d);
}

QuantumOperator random_block_diagonal(int n, int d, Rng &rng) {
    std::vector<QuantumOperator> blocks;
    blocks.reserve(n);
    for (int a = 0; a < n; a++) {
        // Non-Hermitian blocks probe more directions than density matrices alone.
        blocks.push_back(random_density_matrix(d, d, rng) + kI * random_unitary(d, rng));
    }
    return HybridState(std::move(blocks)).to_full();
}

}  // namespace

CouplingOperator::CouplingOperator(int classical_dim, int quantum_dim)
    : classical_dim_(classical_dim), quantum_dim_(quantum_dim) {
    if (classical_dim < 1 || quantum_dim < 1) {
        throw std::invalid_argument("CouplingOperator: dimensions must be positive");
    }
    blocks_.assign(static_cast<size_t>(classical_dim) * classical_dim, QuantumOperator::Zero(quantum_dim, quantum_dim));
}

const QuantumOperator &CouplingOperator::block(int row, int col) const {
    if (row < 0 || col < 0 || row >= classical_dim_ || col >= classical_dim_) {
        throw std::out_of_range("CouplingOperator::block: index out of range");
    }
    return blocks_[static_cast<size_t>(row) * classical_dim_ + col];
}

void CouplingOperator::set_block(int row, int col, QuantumOperator value) {
    if (row < 0 || col < 0 || row >= classical_dim_ || col >= classical_dim_) {
        throw std::out_of_range("CouplingOperator::set_block: index out of range");
    }
    if (value.rows() != quantum_dim_ || value.cols() != quantum_dim_) {
        throw std::invalid_argument("CouplingOperator::set_block: block must be " + std::to_string(quantum_dim_) + "x" +
                                    std::to_string(quantum_dim_));
    }
    if (!all_finite(value)) {
        throw std::invalid_argument("CouplingOperator::set_block: non-finite entries");
    }
    blocks_[static_cast<size_t>(row) * classical_dim_ + col] = std::move(value);
}

void CouplingOperator::add_to_block(int row, int col, const QuantumOperator &value) {
    set_block(row, col, block(row, col) + value);
}

QuantumOperator CouplingOperator::full() const {
    int d = quantum_dim_;
    QuantumOperator m(classical_dim_ * d, classical_dim_ * d);
    for (int a = 0; a < classical_dim_; a++) {
        for (int b = 0; b < classical_dim_; b++) {
            m.block(a * d, b * d, d, d) = block(a, b);
        }
    }
    return m;
}

Hamiltonian::Hamiltonian(std::vector<QuantumOperator> blocks, const Tolerances &tol) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw std::invalid_argument("Hamiltonian: need at least one block");
    }
    auto d = blocks_.front().rows();
    for (const auto &b : blocks_) {
        if (b.rows() < 1 || b.rows() != d || b.cols() != d) {
            throw std::invalid_argument("Hamiltonian: blocks must be square with equal dimension");
        }
        if (hermiticity_deviation(b).value > tol.hermitian) {
            throw std::invalid_argument("Hamiltonian: blocks must be Hermitian");
        }
    }
}

Hamiltonian Hamiltonian::zero(int classical_dim, int quantum_dim) {
    if (classical_dim < 1 || quantum_dim < 1) {
        throw std::invalid_argument("Hamiltonian::zero: dimensions must be positive");
    }
    return Hamiltonian(std::vector<QuantumOperator>(classical_dim, QuantumOperator::Zero(quantum_dim, quantum_dim)));
}

bool Hamiltonian::is_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const QuantumOperator &b) { return max_abs_entry(b) == 0.0; });
}

QuantumOperator liouville_rhs(
    const HybridState &rho, const Hamiltonian &h, std::span<const CouplingOperator> couplings) {
    check_dims(rho, h, couplings);
    int n = rho.classical_dim();
    int d = rho.quantum_dim();
    QuantumOperator r = rho.to_full();
    QuantumOperator hf = QuantumOperator::Zero(n * d, n * d);
    for (int a = 0; a < n; a++) {
        hf.block(a * d, a * d, d, d) = h.block(a);
    }
    QuantumOperator out = -kI * commutator(hf, r);
    QuantumOperator damping = QuantumOperator::Zero(n * d, n * d);
    for (const auto &v : couplings) {
        QuantumOperator vf = v.full();
        out += vf.adjoint() * r * vf;
        damping += vf * vf.adjoint();
    }
    out -= 0.5 * anticommutator(damping, r);
    return out;
}

std::vector<QuantumOperator> liouville_rhs_blocks(
    const HybridState &rho, const Hamiltonian &h, std::span<const CouplingOperator> couplings) {
    check_dims(rho, h, couplings);
    Generator gen(rho.classical_dim(), rho.quantum_dim(), couplings);
    std::vector<QuantumOperator> out(rho.classical_dim());
    gen.apply(h, rho.blocks(), out);
    return out;
}

std::string CpReport::summary() const {
    std::ostringstream out;
    if (ok()) {
        out << "CP structural conditions hold (" << probes_checked << " probes, max off-diagonal norm "
            << max_offdiagonal_norm << ")";
        return out.str();
    }
    out << violations.size() << " violation(s):";
    for (const auto &v : violations) {
        if (v.probe < 0) {
            out << " [sum V V^* block (" << v.row << "," << v.col << ") norm " << v.norm << "]";
        } else {
            out << " [V_" << v.coupling << "^* A V_" << v.coupling << " probe " << v.probe << " block (" << v.row << ","
                << v.col << ") norm " << v.norm << "]";
        }
    }
    return out.str();
}

CpReport check_cp_conditions(
    std::span<const CouplingOperator> couplings,
    std::span<const HybridState> probes,
    const CpCheckOptions &options) {
    CpReport report;
    if (couplings.empty()) {
        return report;
    }
    int n = couplings.front().classical_dim();
    int d = couplings.front().quantum_dim();
    for (const auto &v : couplings) {
        if (v.classical_dim() != n || v.quantum_dim() != d) {
            throw std::invalid_argument("check_cp_conditions: couplings have inconsistent dimensions");
        }
    }

    std::vector<QuantumOperator> fulls;
    fulls.reserve(couplings.size());
    QuantumOperator damping = QuantumOperator::Zero(n * d, n * d);
    for (const auto &v : couplings) {
        fulls.push_back(v.full());
        damping += fulls.back() * fulls.back().adjoint();
    }

    auto scan = [&](const QuantumOperator &m, int coupling, int probe) {
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                if (a == b) {
                    continue;
                }
                double norm = offdiagonal_block(m, d, a, b).norm();
                report.max_offdiagonal_norm = std::max(report.max_offdiagonal_norm, norm);
                if (norm > options.threshold) {
                    report.violations.push_back({coupling, probe, a, b, norm});
                }
            }
        }
    };
    scan(damping, -1, -1);

    std::vector<QuantumOperator> probe_ops;
    for (const auto &p : probes) {
        if (p.classical_dim() != n || p.quantum_dim() != d) {
            throw std::invalid_argument("check_cp_conditions: probe state has mismatched dimensions");
        }
        probe_ops.push_back(p.to_full());
    }
    Rng rng(options.seed);
    for (int k = 0; k < options.random_probes; k++) {
        probe_ops.push_back(random_block_diagonal(n, d, rng));
    }
    report.probes_checked = static_cast<int>(probe_ops.size());

    for (size_t i = 0; i < fulls.size(); i++) {
        for (size_t p = 0; p < probe_ops.size(); p++) {
            scan(fulls[i].adjoint() * probe_ops[p] * fulls[i], static_cast<int>(i), static_cast<int>(p));
        }
    }
    return report;
}

std::vector<double> classical_rate_equations(const HybridState &rho, std::span<const CouplingOperator> couplings) {
    int n = rho.classical_dim();
    for (const auto &v : couplings) {
        if (v.classical_dim() != n || v.quantum_dim() != rho.quantum_dim()) {
            throw std::invalid_argument("classical_rate_equations: dimension mismatch");
        }
    }
    std::vector<double> dp(n, 0.0);
    for (const auto &v : couplings) {
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                const auto &blk = v.block(a, b);
                // Tr(V_ab^* rho_a V_ab) = Tr(V_ab V_ab^* rho_a): flow of weight from event a to event b.
                double flow = ((blk * blk.adjoint()) * rho.block(a)).trace().real();
                dp[b] += flow;
                dp[a] -= flow;
            }
        }
    }
    return dp;
}

Trajectory evolve(
    const HybridState &rho0,
    const Hamiltonian &h,
    std::span<const CouplingOperator> couplings,
    const EvolutionConfig &cfg) {
    if (!(cfg.step > 0.0) || !(cfg.duration > 0.0) || !std::isfinite(cfg.duration)) {
        throw std::invalid_argument("evolve: step and duration must be positive");
    }
    if (cfg.step > cfg.duration * (1.0 + 1e-12)) {
        throw std::invalid_argument("evolve: step must not exceed duration");
    }
    if (cfg.record_every < 1) {
        throw std::invalid_argument("evolve: record_every must be >= 1");
    }
    check_dims(rho0, h, couplings);
    require_valid(rho0, cfg.tolerances);

    {
        CpCheckOptions opts;
        opts.random_probes = cfg.cp_random_probes;
        opts.seed = cfg.cp_seed;
        std::vector<HybridState> probes{rho0};
        auto cp = check_cp_conditions(couplings, probes, opts);
        if (!cp.ok()) {
            throw CpConditionError("evolve: coupling operators fail the CP structural check: " + cp.summary());
        }
    }

    auto steps = static_cast<long>(std::ceil(cfg.duration / cfg.step - 1e-9));
    steps = std::max(steps, 1L);
    double dt = cfg.duration / static_cast<double>(steps);

    int n = rho0.classical_dim();
    int d = rho0.quantum_dim();
    Generator gen(n, d, couplings);

    Trajectory out;
    auto record = [&](double t, const std::vector<QuantumOperator> &blocks) {
        HybridState state(blocks);
        auto report = validate_state(state, cfg.tolerances);
        double drift = report.trace_deviation;
        if (drift > cfg.trace_drift_limit) {
            std::ostringstream msg;
            msg << "evolve: trace drift " << drift << " at t=" << t << " exceeds " << cfg.trace_drift_limit
                << "; reduce the step";
            throw NumericalGuardError(msg.str());
        }
        if (!report.ok()) {
            std::ostringstream msg;
            msg << "evolve: state left the valid region at t=" << t << ": " << report.summary();
            throw NumericalGuardError(msg.str());
        }
        out.push_back({t, std::move(state), drift, report.min_eigenvalue()});
    };

    std::vector<QuantumOperator> y = rho0.blocks();
    std::vector<QuantumOperator> k1(n), k2(n), k3(n), k4(n), tmp(n);
    record(0.0, y);
    for (long s = 1; s <= steps; s++) {
        gen.apply(h, y, k1);
        for (int a = 0; a < n; a++) tmp[a] = y[a] + (0.5 * dt) * k1[a];
        gen.apply(h, tmp, k2);
        for (int a = 0; a < n; a++) tmp[a] = y[a] + (0.5 * dt) * k2[a];
        gen.apply(h, tmp, k3);
        for (int a = 0; a < n; a++) tmp[a] = y[a] + dt * k3[a];
        gen.apply(h, tmp, k4);
        for (int a = 0; a < n; a++) {
            y[a] += (dt / 6.0) * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
            y[a] = 0.5 * (y[a] + y[a].adjoint());
        }
        if (s % cfg.record_every == 0 || s == steps) {
            record(dt * static_cast<double>(s), y);
        }
    }
    return out;
}

void write_trajectory_csv(std::ostream &out, const Trajectory &trajectory) {
    if (trajectory.empty()) {
        out << "t,trace_drift,min_eigenvalue\n";
        return;
    }
    int n = trajectory.front().state.classical_dim();
    out << "t";
    for (int a = 0; a < n; a++) {
        out << ",p_" << a;
    }
    out << ",trace_drift,min_eigenvalue\n";
    auto flags = out.flags();
    auto precision = out.precision();
    out << std::setprecision(12);
    for (const auto &pt : trajectory) {
        out << pt.t;
        for (double p : pt.state.block_traces()) {
            out << ',' << p;
        }
        out << ',' << pt.trace_drift << ',' << pt.min_eigenvalue << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace qclink
