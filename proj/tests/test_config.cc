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

#include "qclink/config.h"

#include <gtest/gtest.h>

#include <filesystem>

using namespace qclink;

namespace {

int error_line(const std::string &text) {
    try {
        parse_config(text);
    } catch (const ConfigError &ex) {
        return ex.line();
    }
    return -1;
}

}  // namespace

TEST(config, every_shipped_config_parses_and_builds) {
    int seen = 0;
    for (const auto &entry : std::filesystem::directory_iterator(std::string(QCLINK_SOURCE_DIR) + "/configs")) {
        if (entry.path().extension() != ".cfg") {
            continue;
        }
        seen++;
        ScenarioConfig cfg = load_config(entry.path().string());
        HybridState rho = build_initial_state(cfg);
        EXPECT_EQ(rho.classical_dim(), resolved_classical_dim(cfg)) << entry.path();
        EXPECT_EQ(rho.quantum_dim(), cfg.quantum_dim) << entry.path();
        EXPECT_NO_THROW(build_couplings(cfg)) << entry.path();
    }
    EXPECT_GE(seen, 5);
}

TEST(config, binary_section_values) {
    ScenarioConfig cfg = parse_config(
        "# comment\n"
        "[detector]\n"
        "family = binary   # trailing comment\n"
        "quantum_dim = 3\n"
        "k1 = 1.5\n"
        "k2 = 0.25\n"
        "projector = 2\n"
        "[evolution]\n"
        "step = 0.01\n"
        "duration = 4\n"
        "record_every = 10\n");
    EXPECT_EQ(cfg.family, DetectorFamily::kBinary);
    EXPECT_EQ(cfg.quantum_dim, 3);
    EXPECT_DOUBLE_EQ(*cfg.k1, 1.5);
    EXPECT_EQ(resolved_classical_dim(cfg), 2);
    auto vs = build_couplings(cfg);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].block(0, 1)(2, 2), Complex(1.5, 0.0));
    EvolutionConfig ev = build_evolution(cfg);
    EXPECT_DOUBLE_EQ(ev.step, 0.01);
    EXPECT_DOUBLE_EQ(ev.duration, 4.0);
    EXPECT_EQ(ev.record_every, 10);
    EXPECT_EQ(cfg.line_of("detector.k2"), 6);
}

TEST(config, custom_entries_accumulate) {
    ScenarioConfig cfg = parse_config(
        "[detector]\nfamily = custom\nquantum_dim = 2\n"
        "[coupling]\nclassical_dim = 2\n"
        "entry = 0,0,1,1.0,0,0\n"
        "entry = 0,0,1,0.5,0,0\n"
        "entry = 1,1,0,2.0,1,1\n");
    auto vs = build_couplings(cfg);
    ASSERT_EQ(vs.size(), 2u);
    EXPECT_EQ(vs[0].block(0, 1)(0, 0), Complex(1.5, 0.0));
    EXPECT_EQ(vs[1].block(1, 0)(1, 1), Complex(2.0, 0.0));
}

TEST(config, signal_weights_and_coherences) {
    ScenarioConfig cfg = parse_config(
        "[detector]\nquantum_dim = 3\n"
        "[signal]\nweights = 0.5, 0.3, 0.2\noffdiag = 0:1:0.1:0.05\nclassical = 0.4, 0.6\n");
    DensityBlock w = build_signal(cfg);
    EXPECT_EQ(w.matrix()(0, 1), Complex(0.1, 0.05));
    EXPECT_EQ(w.matrix()(1, 0), Complex(0.1, -0.05));
    HybridState rho = build_initial_state(cfg);
    EXPECT_NEAR(rho.block_traces()[1], 0.6, 1e-15);
}

TEST(config, default_signal_is_ground_state) {
    ScenarioConfig cfg = parse_config("[detector]\nquantum_dim = 2\n");
    EXPECT_EQ(build_signal(cfg).matrix()(0, 0), Complex(1.0, 0.0));
    EXPECT_EQ(build_classical(cfg).values(), (std::vector<double>{1.0, 0.0}));
    EXPECT_TRUE(build_couplings(cfg).empty());
}

TEST(config, plan_section) {
    ScenarioConfig cfg = parse_config("[plan]\nrho1 = 0.8\neff = 0.45\naccuracy = 0.05\nmargin = 0.045\nconfidence = 0.6\nm_max = 70\n");
    EXPECT_DOUBLE_EQ(cfg.plan.eta_det, 0.45);
    EXPECT_DOUBLE_EQ(*cfg.plan.margin, 0.045);
    EXPECT_EQ(cfg.m_max, 70);
}

TEST(config, errors_carry_line_numbers) {
    EXPECT_EQ(error_line("[detector]\nfamily = quantum\n"), 2);
    EXPECT_EQ(error_line("\n\n[nowhere]\n"), 3);
    EXPECT_EQ(error_line("[detector]\nk3 = 1\n"), 2);
    EXPECT_EQ(error_line("[detector]\nk1 = one\n"), 2);
    EXPECT_EQ(error_line("[detector]\nk1 1.0\n"), 2);
    EXPECT_EQ(error_line("k1 = 1.0\n"), 1);
    EXPECT_EQ(error_line("[detector]\nk1 = 1\nk1 = 2\n"), 3);
    EXPECT_EQ(error_line("[detector]\nk1 =\n"), 2);
    EXPECT_EQ(error_line("[detector\n"), 1);
    EXPECT_EQ(error_line("[detector]\n[detector]\n"), 2);
    EXPECT_EQ(error_line("[evolution]\nstep = 1e-3x\n"), 2);
}

TEST(config, basis_indices_must_fit_quantum_dimension) {
    EXPECT_EQ(error_line("[detector]\nfamily = binary\nquantum_dim = 2\nk1 = 1\nk2 = 0\nprojector = 2\n"), 6);
    EXPECT_EQ(error_line("[detector]\nfamily = n_state\nquantum_dim = 2\nk = 1\nprojectors = 0, 5\n"), 5);
    EXPECT_EQ(error_line("[detector]\nquantum_dim = 2\n[signal]\noffdiag = 0:2:0.1\n"), 4);
    EXPECT_EQ(
        error_line("[detector]\nfamily = custom\nquantum_dim = 2\n[coupling]\nclassical_dim = 2\nentry = 0,0,1,1,0,3\n"), 6);
    EXPECT_EQ(
        error_line("[detector]\nfamily = custom\nquantum_dim = 2\n[coupling]\nclassical_dim = 2\nentry = 0,0,2,1,0,0\n"), 6);
}

TEST(config, semantic_errors) {
    EXPECT_EQ(error_line("[detector]\nfamily = binary\nk1 = 1\n"), 2);  // k2 missing
    EXPECT_EQ(error_line("[detector]\nquantum_dim = 2\n[signal]\nweights = 1\n"), 4);
    EXPECT_EQ(error_line("[detector]\nfamily = binary\nk1 = 1\nk2 = 0\n[signal]\nclassical = 0.5, 0.25, 0.25\n"), 6);
    EXPECT_EQ(error_line("[evolution]\nstep = -1\n"), 2);
    EXPECT_EQ(error_line("[evolution]\nrecord_every = 0\n"), 2);
    EXPECT_EQ(error_line("[plan]\nrho1 = 0.99\n"), 2);
    EXPECT_EQ(error_line("[detector]\nfamily = binary\nk1 = 1\nk2 = 1\n[coupling]\nentry = 0,0,1,1,0,0\n"), 6);
    EXPECT_EQ(error_line("[detector]\nfamily = two_state\nquantum_dim = 2\nk1 = 1\nk2 = 0\nn1 = 1\nn2 = 0\ne2 = 1\ne3 = 1\n"), 9);
}

TEST(config, invalid_signal_reports_weights_line) {
    ScenarioConfig cfg = parse_config("[detector]\nquantum_dim = 2\n\n[signal]\nweights = 1.2, -0.2\n");
    try {
        build_signal(cfg);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &ex) {
        EXPECT_EQ(ex.line(), 5);
        EXPECT_NE(std::string(ex.what()).find("line 5"), std::string::npos);
    }
}

TEST(config, missing_file) {
    EXPECT_THROW(load_config("/nonexistent/qclink.cfg"), ConfigError);
}
