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

#include <gtest/gtest.h>

#include <cmath>

#include "qclink/coupling_shapes.h"
#include "test_support.h"

using namespace qclink;
using namespace qclink::testing;

namespace {

/// Hand-rolled RK4 for the two-level rate system x' = -f x + b y, y' = f x - b y.
double rate_oracle(double forward, double backward, double x0, double t) {
    double x = x0, y = 0.0;
    const int steps = 20000;
    double h = t / steps;
    auto fx = [&](double xx, double yy) { return -forward * xx + backward * yy; };
    for (int s = 0; s < steps; s++) {
        double k1 = fx(x, y);
        double k2 = fx(x + 0.5 * h * k1, y - 0.5 * h * k1);
        double k3 = fx(x + 0.5 * h * k2, y - 0.5 * h * k2);
        double k4 = fx(x + h * k3, y - h * k3);
        double dx = h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        x += dx;
        y -= dx;
    }
    return y;
}

Trajectory integrate(const HybridState &rho0, const std::vector<CouplingOperator> &vs, double duration, double step = 1e-3) {
    EvolutionConfig cfg;
    cfg.step = step;
    cfg.duration = duration;
    cfg.record_every = 100;
    return evolve(rho0, Hamiltonian::zero(rho0.classical_dim(), rho0.quantum_dim()), vs, cfg);
}

}  // namespace

TEST(detectors, binary_spec_validation) {
    EXPECT_THROW((BinaryDetectorSpec{0.0, 0.0, Projector::basis(2, 0)}.validate()), std::invalid_argument);
    EXPECT_THROW((BinaryDetectorSpec{-1.0, 1.0, Projector::basis(2, 0)}.validate()), std::invalid_argument);
    EXPECT_THROW((SignalDecomposition{0.7, 0.4}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((SignalDecomposition{0.7, 0.3}.validate()));
}

TEST(detectors, binary_coupling_is_antidiagonal) {
    BinaryDetectorSpec spec{1.5, 0.5, Projector::basis(2, 1)};
    CouplingOperator v = binary_coupling(spec);
    EXPECT_EQ(v.block(0, 1), 1.5 * spec.e.matrix());
    EXPECT_EQ(v.block(1, 0), 0.5 * spec.e.matrix());
    EXPECT_EQ(v.block(0, 0).norm(), 0.0);
    EXPECT_EQ(v.block(1, 1).norm(), 0.0);
}

TEST(detectors, binary_closed_form_matches_rate_oracle) {
    Rng rng(41);
    for (int trial = 0; trial < 10; trial++) {
        double k1 = uniform(rng, 0.1, 2.0), k2 = uniform(rng, 0.0, 2.0);
        double a0 = uniform(rng, 0.0, 1.0);
        double t = uniform(rng, 0.1, 5.0);
        BinaryDetectorSpec spec{k1, k2, Projector::basis(2, 0)};
        auto p = binary_trajectory(spec, {a0, 1.0 - a0}, t);
        double oracle = rate_oracle(k1 * k1, k2 * k2, a0, t);
        EXPECT_NEAR(p.p1, oracle, 1e-10);
        EXPECT_NEAR(p.p0 + p.p1, 1.0, 1e-14);
    }
}

TEST(detectors, binary_asymptotics) {
    Projector e = Projector::basis(2, 0);
    auto max_eff = binary_asymptotic({1.0, 0.0, e}, {1.0, 0.0});
    EXPECT_DOUBLE_EQ(max_eff.p1, 1.0);
    auto half = binary_asymptotic({1.0, 1.0, e}, {1.0, 0.0});
    EXPECT_DOUBLE_EQ(half.p1, 0.5);
    auto partial = binary_asymptotic({2.0, 1.0, e}, {0.6, 0.4});
    EXPECT_NEAR(partial.p1, 0.8 * 0.6, 1e-15);
    EXPECT_NEAR(partial.p0, 1.0 - 0.48, 1e-15);
    auto late = binary_trajectory({2.0, 1.0, e}, {0.6, 0.4}, 60.0);
    EXPECT_NEAR(late.p1, partial.p1, 1e-14);
}

TEST(detectors, binary_trajectory_starts_at_ground) {
    auto p = binary_trajectory({1.0, 0.3, Projector::basis(2, 0)}, {0.5, 0.5}, 0.0);
    EXPECT_EQ(p.p1, 0.0);
    EXPECT_EQ(p.p0, 1.0);
    EXPECT_THROW(binary_trajectory({1.0, 0.3, Projector::basis(2, 0)}, {0.5, 0.5}, -1.0), std::invalid_argument);
}

TEST(detectors, binary_integration_matches_closed_form) {
    Rng rng(42);
    for (int trial = 0; trial < 5; trial++) {
        double k1 = uniform(rng, 0.2, 1.5), k2 = uniform(rng, 0.0, 1.5);
        Projector e = Projector::random(2, rng);
        DensityBlock w(random_density_matrix(2, 2, rng));
        double a0 = e.expectation(w.matrix());
        BinaryDetectorSpec spec{k1, k2, e};
        std::vector<CouplingOperator> vs{binary_coupling(spec)};
        auto traj = integrate(product_state(w, ProbabilityVector::initial(2)), vs, 3.0);
        for (const auto &pt : traj) {
            auto p = binary_trajectory(spec, {a0, 1.0 - a0}, pt.t);
            EXPECT_NEAR(pt.state.block_traces()[1], p.p1, 1e-9);
        }
    }
}

TEST(detectors, balance_residual_vanishes_at_stationarity) {
    BinaryDetectorSpec spec{1.0, 0.7, Projector::basis(2, 0)};
    std::vector<CouplingOperator> vs{binary_coupling(spec)};
    HybridState rho0 = product_state(DensityBlock::maximally_mixed(2), ProbabilityVector::initial(2));
    auto traj = integrate(rho0, vs, 20.0, 1e-2);
    const HybridState &late = traj.back().state;
    auto rates = classical_rate_equations(late, vs);
    ASSERT_LT(std::abs(rates[1]), 1e-8);
    EXPECT_LE(std::abs(balance_residual(spec, late)), 1e-6);
    EXPECT_GT(std::abs(balance_residual(spec, rho0)), 0.1);
}

TEST(detectors, two_state_spec_validation) {
    Projector a = Projector::basis(3, 0), b = Projector::basis(3, 1);
    EXPECT_NO_THROW((TwoStateDetectorSpec{1, 0, 1, 0, a, b}.validate()));
    EXPECT_THROW((TwoStateDetectorSpec{1, 0, 1, 0, a, a}.validate()), std::invalid_argument);
    EXPECT_THROW((TwoStateDetectorSpec{0, 0, 0, 0, a, b}.validate()), std::invalid_argument);
    EXPECT_THROW((TwoStateDetectorSpec{1, 0, 1, 0, a, Projector::basis(2, 1)}.validate()), std::invalid_argument);
}

TEST(detectors, two_state_couplings_have_single_focus_shapes) {
    TwoStateDetectorSpec spec{1.0, 0.5, 0.8, 0.2, Projector::basis(3, 0), Projector::basis(3, 1)};
    auto vs = two_state_couplings(spec);
    ASSERT_EQ(vs.size(), 2u);
    EXPECT_EQ(BlockPattern::of(vs[0]).str(), "010;100;000");
    EXPECT_EQ(BlockPattern::of(vs[1]).str(), "001;000;100");
    EXPECT_TRUE(check_cp_conditions(vs, {}).ok());
}

TEST(detectors, two_state_closed_form_matches_rate_oracle) {
    Rng rng(43);
    for (int trial = 0; trial < 10; trial++) {
        TwoStateDetectorSpec spec{
            uniform(rng, 0.1, 2), uniform(rng, 0, 2), uniform(rng, 0.1, 2), uniform(rng, 0, 2), Projector::basis(3, 0),
            Projector::basis(3, 1)};
        double a0 = uniform(rng, 0, 0.6), b0 = uniform(rng, 0, 0.4), t = uniform(rng, 0.1, 4);
        auto p = two_state_trajectory(spec, a0, b0, t);
        EXPECT_NEAR(p.p1, rate_oracle(spec.k1 * spec.k1, spec.k2 * spec.k2, a0, t), 1e-10);
        EXPECT_NEAR(p.p2, rate_oracle(spec.n1 * spec.n1, spec.n2 * spec.n2, b0, t), 1e-10);
        EXPECT_NEAR(p.p0 + p.p1 + p.p2, 1.0, 1e-14);
    }
}

TEST(detectors, two_state_efficiency_cases) {
    Projector a = Projector::basis(3, 0), b = Projector::basis(3, 1);
    auto full = two_state_asymptotic({1.0, 0.0, 0.7, 0.0, a, b}, 0.4, 0.6);
    EXPECT_NEAR(full.total_efficiency, 1.0, 1e-15);
    auto half = two_state_asymptotic({1.0, 1.0, 1.0, 1.0, a, b}, 0.5, 0.5);
    EXPECT_NEAR(half.total_efficiency, 0.5, 1e-15);
    auto leaky = two_state_asymptotic({1.0, 0.0, 0.7, 0.0, a, b}, 0.4, 0.3);
    EXPECT_NEAR(leaky.total_efficiency, 0.7, 1e-15);
    EXPECT_NEAR(two_state_equal_weight_limit({1.0, 0.0, 0.6, 0.0, a, b}), 0.5, 1e-15);
}

TEST(detectors, two_state_rejects_weight_on_dead_channel) {
    TwoStateDetectorSpec spec{1.0, 0.0, 0.0, 0.0, Projector::basis(3, 0), Projector::basis(3, 1)};
    EXPECT_NO_THROW(two_state_trajectory(spec, 1.0, 0.0, 1.0));
    EXPECT_THROW(two_state_trajectory(spec, 0.5, 0.5, 1.0), std::invalid_argument);
    EXPECT_THROW(two_state_asymptotic(spec, 0.5, 0.5), std::invalid_argument);
}

TEST(detectors, two_state_integration_matches_closed_form) {
    TwoStateDetectorSpec spec{1.0, 0.4, 0.7, 0.2, Projector::basis(3, 0), Projector::basis(3, 1)};
    QuantumOperator w = QuantumOperator::Zero(3, 3);
    w(0, 0) = 0.5;
    w(1, 1) = 0.3;
    w(2, 2) = 0.2;
    w(0, 1) = w(1, 0) = 0.2;
    auto traj = integrate(product_state(DensityBlock(w), ProbabilityVector::initial(3)), two_state_couplings(spec), 4.0);
    for (const auto &pt : traj) {
        auto p = two_state_trajectory(spec, 0.5, 0.3, pt.t);
        auto q = pt.state.block_traces();
        EXPECT_NEAR(q[0], p.p0, 1e-9);
        EXPECT_NEAR(q[1], p.p1, 1e-9);
        EXPECT_NEAR(q[2], p.p2, 1e-9);
    }
}

TEST(detectors, n_state_couplings_and_validation) {
    NStateDetectorSpec spec{2.0, {Projector::basis(3, 0), Projector::basis(3, 1), Projector::basis(3, 2)}};
    auto vs = n_state_couplings(spec);
    ASSERT_EQ(vs.size(), 3u);
    for (int i = 0; i < 3; i++) {
        EXPECT_EQ(vs[i].classical_dim(), 4);
        BlockPattern expected(4);
        expected.set(0, i + 1);
        EXPECT_EQ(BlockPattern::of(vs[i]), expected);
        EXPECT_NEAR(vs[i].block(0, i + 1).norm(), std::sqrt(2.0), 1e-15);
    }
    EXPECT_TRUE(check_cp_conditions(vs, {}).ok());

    NStateDetectorSpec bad{1.0, {Projector::basis(2, 0), Projector::basis(2, 0)}};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_THROW((NStateDetectorSpec{0.0, {Projector::basis(2, 0)}}.validate()), std::invalid_argument);
    EXPECT_THROW((NStateDetectorSpec{1.0, {}}.validate()), std::invalid_argument);
    EXPECT_THROW(n_state_trajectory(spec, 0, 1.0), std::invalid_argument);
    EXPECT_THROW(n_state_trajectory(spec, 4, 1.0), std::invalid_argument);
}

TEST(detectors, n_state_efficiency_is_independent_of_channel_count) {
    for (double t : {0.0, 0.3, 1.0, 2.5, 10.0}) {
        std::vector<double> values;
        for (int n : {1, 2, 5}) {
            NStateDetectorSpec spec{1.0, {}};
            for (int i = 0; i < n; i++) {
                spec.projectors.push_back(Projector::basis(n, i));
            }
            auto p = n_state_trajectory(spec, 1, t);
            EXPECT_NEAR(p[0] + p[1], 1.0, 1e-15);
            values.push_back(p[1]);
        }
        EXPECT_EQ(values[0], values[1]);
        EXPECT_EQ(values[0], values[2]);
    }
    NStateDetectorSpec one{1.0, {Projector::basis(1, 0)}};
    EXPECT_GE(n_state_trajectory(one, 1, 10.0)[1], 0.9999);
}

TEST(detectors, filter_quantum_output_cases) {
    FilterSpec spec{1.0, Projector::basis(3, 0)};
    double t = 1.7, decay = std::exp(-0.5 * spec.k * t);

    DensityBlock aligned = DensityBlock::pure(StateVector::Unit(3, 0));
    EXPECT_LT((filter_quantum_output(aligned, spec, t).matrix() - aligned.matrix()).norm(), 1e-15);

    QuantumOperator perp = QuantumOperator::Zero(3, 3);
    perp(1, 1) = 0.6;
    perp(2, 2) = 0.4;
    perp(1, 2) = perp(2, 1) = 0.3;
    EXPECT_LT((filter_quantum_output(DensityBlock(perp), spec, t).matrix() - perp).norm(), 1e-15);

    Rng rng(44);
    QuantumOperator mixed = random_density_matrix(3, 3, rng);
    QuantumOperator out = filter_quantum_output(DensityBlock(mixed), spec, t).matrix();
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            bool touches = (i == 0) != (j == 0);
            Complex expected = touches ? mixed(i, j) * decay : mixed(i, j);
            EXPECT_LT(std::abs(out(i, j) - expected), 1e-15) << i << "," << j;
        }
    }
    EXPECT_LT((filter_quantum_output(DensityBlock(mixed), spec, 0.0).matrix() - mixed).norm(), 1e-15);
}

TEST(detectors, filter_operator_and_weight_forms_agree) {
    Rng rng(45);
    for (int trial = 0; trial < 10; trial++) {
        int d = uniform_int(rng, 2, 4);
        int aligned = uniform_int(rng, 0, d - 1);
        double k = uniform(rng, 0.1, 3.0), t = uniform(rng, 0.0, 4.0);
        QuantumOperator rho = random_density_matrix(d, d, rng);
        FilterSpec spec{k, Projector::basis(d, aligned)};
        QuantumOperator a = filter_quantum_output(DensityBlock(rho), spec, t).matrix();
        QuantumOperator b = filter_weights_output(rho, aligned, k, t);
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(detectors, filter_integration_matches_closed_forms) {
    Rng rng(46);
    FilterSpec spec{0.8, Projector::basis(3, 1)};
    QuantumOperator w = random_density_matrix(3, 3, rng);
    ProbabilityVector p({0.7, 0.3});
    double q1 = spec.e1.expectation(w);
    auto traj = integrate(product_state(DensityBlock(w), p), {filter_coupling(spec)}, 4.0);
    for (const auto &pt : traj) {
        auto cls = filter_classical_output(p[0], p[1], q1, spec.k, pt.t);
        auto traces = pt.state.block_traces();
        EXPECT_NEAR(traces[0], cls.p0, 1e-9);
        EXPECT_NEAR(traces[1], cls.p1, 1e-9);
        QuantumOperator marginal = quantum_marginal(pt.state).matrix();
        QuantumOperator expected = filter_quantum_output(DensityBlock(w), spec, pt.t).matrix();
        EXPECT_LT((marginal - expected).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(detectors, filter_classical_output_limits) {
    auto start = filter_classical_output(1.0, 0.0, 0.4, 1.0, 0.0);
    EXPECT_EQ(start.p0, 1.0);
    auto late = filter_classical_output(1.0, 0.0, 0.4, 1.0, 50.0);
    EXPECT_NEAR(late.p0, 0.8, 1e-15);
    EXPECT_NEAR(late.p1, 0.2, 1e-15);
    auto balanced = filter_classical_output(0.5, 0.5, 1.0, 1.0, 3.0);
    EXPECT_EQ(balanced.p0, 0.5);
    EXPECT_THROW(filter_classical_output(0.6, 0.6, 0.5, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(filter_classical_output(0.5, 0.5, 1.5, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(filter_classical_output(0.5, 0.5, 0.5, 0.0, 1.0), std::invalid_argument);
}
