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

#include "qclink/coupling_shapes.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "test_support.h"

using namespace qclink;
using namespace qclink::testing;

namespace {

const std::array<std::pair<int, int>, 6> kOffDiagonal{{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};

BlockPattern offdiagonal_pattern(int mask) {
    BlockPattern p(3);
    for (int k = 0; k < 6; k++) {
        if (mask >> k & 1) {
            p.set(kOffDiagonal[k].first, kOffDiagonal[k].second);
        }
    }
    return p;
}

/// The six conjuncts written with 1-based labels a_ij, evaluated literally.
bool literal_three_state_condition(const BlockPattern &p) {
    auto nz = [&](int i, int j) { return p(i - 1, j - 1); };
    return !(nz(3, 1) && nz(2, 3)) && !(nz(2, 1) && nz(2, 3)) && !(nz(1, 2) && nz(1, 3)) &&
           !(nz(1, 2) && nz(3, 2)) && !(nz(2, 3) && nz(1, 3)) && !(nz(1, 3) && nz(2, 3));
}

const std::vector<std::pair<std::string, std::string>> kDisplayed{
    {"W1", "001;100;010"}, {"W2", "010;001;100"}, {"W3", "001;100;100"}, {"W4", "010;100;100"},
    {"W5", "001;000;010"}, {"W6", "000;001;010"}, {"W7", "010;001;000"}, {"W8", "000;100;100"},
    {"W9", "010;100;000"}, {"W10", "001;000;100"}, {"W11", "001;000;100"},
};

/// Smallest displayed shape containing the pattern, first in order on ties.
std::string containing_shape(const BlockPattern &p) {
    std::string best = "INADMISSIBLE";
    int best_count = 100;
    for (const auto &[label, text] : kDisplayed) {
        BlockPattern shape = BlockPattern::parse(text);
        if (p.subset_of(shape) && shape.count() < best_count) {
            best = label;
            best_count = shape.count();
        }
    }
    return best;
}

/// J(beta, alpha) = d(dp_beta/dt) / d(weight in block alpha), measured by
/// putting a maximally mixed unit block in alpha only.
Eigen::Matrix3d rate_jacobian(const CouplingOperator &v) {
    Eigen::Matrix3d j = Eigen::Matrix3d::Zero();
    int d = v.quantum_dim();
    std::vector<CouplingOperator> vs{v};
    for (int a = 0; a < 3; a++) {
        std::vector<QuantumOperator> blocks(3, QuantumOperator::Zero(d, d));
        blocks[a] = QuantumOperator::Identity(d, d) / static_cast<double>(d);
        auto rates = classical_rate_equations(HybridState(blocks), vs);
        for (int b = 0; b < 3; b++) {
            j(b, a) = std::abs(rates[b]) < 1e-12 ? 0.0 : rates[b];
        }
    }
    return j;
}

bool depends(const Eigen::Matrix3d &j, int b, int a) {
    return j(b, a) != 0.0;
}

bool frozen(const Eigen::Matrix3d &j, int b) {
    return j.row(b).isZero();
}

bool topology_predicate(TopologyTag tag, const Eigen::Matrix3d &j) {
    switch (tag) {
        case TopologyTag::kCascade: {
            // Every p is fed by exactly one other p, forming a 3-cycle.
            std::array<int, 3> feeder{-1, -1, -1};
            for (int b = 0; b < 3; b++) {
                int count = 0;
                for (int a = 0; a < 3; a++) {
                    if (a != b && depends(j, b, a)) {
                        feeder[b] = a;
                        count++;
                    }
                }
                if (count != 1) {
                    return false;
                }
            }
            return feeder[feeder[feeder[0]]] == 0 && feeder[0] != 0;
        }
        case TopologyTag::kIndependentProbability:
            for (int b = 0; b < 3; b++) {
                bool own_only = depends(j, b, b);
                for (int a = 0; a < 3; a++) {
                    own_only &= a == b || !depends(j, b, a);
                }
                if (own_only) {
                    return true;
                }
            }
            return false;
        case TopologyTag::kFrozenUnderInit:
            return frozen(j, 0);
        case TopologyTag::kTwoEntry: {
            int sources = 0;
            for (int a = 0; a < 3; a++) {
                sources += j(a, a) != 0.0 ? 1 : 0;
            }
            return sources == 2;
        }
        case TopologyTag::kSingleFocus: {
            int stuck = -1, count = 0;
            for (int b = 0; b < 3; b++) {
                if (frozen(j, b)) {
                    stuck = b;
                    count++;
                }
            }
            if (count != 1 || stuck == 0) {
                return false;
            }
            int x = (stuck + 1) % 3, y = (stuck + 2) % 3;
            return depends(j, x, y) && depends(j, y, x);
        }
    }
    return false;
}

}  // namespace

TEST(coupling_shapes, pattern_parse_and_print) {
    BlockPattern p = BlockPattern::parse("01;10");
    EXPECT_EQ(p.dim(), 2);
    EXPECT_TRUE(p(0, 1));
    EXPECT_FALSE(p(0, 0));
    EXPECT_EQ(p.str(), "01;10");
    EXPECT_EQ(p.count(), 2);
    EXPECT_TRUE(p.diagonal_zero());
    EXPECT_FALSE(p.offdiagonal_zero());
    EXPECT_THROW(BlockPattern::parse("01;1"), std::invalid_argument);
    EXPECT_THROW(BlockPattern::parse("0x;10"), std::invalid_argument);
}

TEST(coupling_shapes, pattern_of_operator_uses_threshold) {
    CouplingOperator v(2, 2);
    QuantumOperator tiny = QuantumOperator::Zero(2, 2);
    tiny(0, 0) = 1e-14;
    v.set_block(0, 1, QuantumOperator::Identity(2, 2));
    v.set_block(1, 0, tiny);
    EXPECT_EQ(BlockPattern::of(v).str(), "01;00");
    EXPECT_EQ(BlockPattern::of(v, 1e-15).str(), "01;10");
}

TEST(coupling_shapes, two_state_admissibility_over_all_patterns) {
    std::set<std::string> admissible;
    for (int mask = 0; mask < 16; mask++) {
        BlockPattern p(2);
        bool a = mask & 1, b = mask & 2, c = mask & 4, d = mask & 8;
        p.set(0, 0, a);
        p.set(0, 1, b);
        p.set(1, 0, c);
        p.set(1, 1, d);
        bool oracle = (!a || !b) && (!c || !d) && (!a || !c) && (!b || !d);
        auto cls = admissible_2x2(p);
        EXPECT_EQ(cls.admissible(), oracle) << p.str();
        EXPECT_EQ(cls.violated.empty(), oracle) << p.str();
        if (oracle && mask != 0) {
            admissible.insert(p.str());
        }
    }
    EXPECT_EQ(admissible, (std::set<std::string>{"01;10", "00;10", "01;00", "10;01", "10;00", "00;01"}));
    EXPECT_EQ(*admissible_2x2(BlockPattern(2)).tag, ShapeTag2x2::kDiagonal);
    EXPECT_EQ(*admissible_2x2(BlockPattern::parse("01;10")).tag, ShapeTag2x2::kAntidiagonal);
    EXPECT_EQ(*admissible_2x2(BlockPattern::parse("10;00")).tag, ShapeTag2x2::kDiagonalPartialA);
    auto bad = admissible_2x2(BlockPattern::parse("11;00"));
    EXPECT_EQ(bad.violated, (std::vector<std::string>{"(a=0 or b=0)"}));
}

TEST(coupling_shapes, two_state_catalogue) {
    auto cat = enumerate_admissible_patterns(2);
    ASSERT_EQ(cat.size(), 6u);
    std::set<std::string> patterns;
    for (const auto &e : cat) {
        patterns.insert(e.pattern.str());
        EXPECT_TRUE(e.conditions_hold);
        EXPECT_FALSE(e.duplicate_of.has_value());
        EXPECT_EQ(std::string(to_string(*admissible_2x2(e.pattern).tag)), e.tag);
    }
    EXPECT_EQ(patterns.size(), 6u);
}

TEST(coupling_shapes, three_state_catalogue) {
    auto cat = enumerate_admissible_patterns(3);
    ASSERT_EQ(cat.size(), 11u);
    for (size_t k = 0; k < cat.size(); k++) {
        EXPECT_EQ(cat[k].label, kDisplayed[k].first);
        EXPECT_EQ(cat[k].pattern.str(), kDisplayed[k].second);
        EXPECT_EQ(cat[k].conditions_hold, literal_three_state_condition(cat[k].pattern)) << cat[k].label;
    }
    EXPECT_EQ(cat[10].duplicate_of, std::optional<std::string>("W10"));
    for (size_t k = 0; k < 10; k++) {
        EXPECT_FALSE(cat[k].duplicate_of.has_value()) << cat[k].label;
    }
    EXPECT_FALSE(cat[1].conditions_hold);  // W2 breaks the first conjunct
    EXPECT_THROW(enumerate_admissible_patterns(4), std::invalid_argument);
}

TEST(coupling_shapes, literal_condition_matches_oracle_on_all_offdiagonal_patterns) {
    for (int mask = 0; mask < 64; mask++) {
        BlockPattern p = offdiagonal_pattern(mask);
        EXPECT_EQ(violated_three_state_conditions(p).empty(), literal_three_state_condition(p)) << p.str();
    }
}

TEST(coupling_shapes, classification_matches_containment_oracle) {
    for (int mask = 1; mask < 64; mask++) {
        BlockPattern p = offdiagonal_pattern(mask);
        auto cls = admissible_3x3(p);
        EXPECT_EQ(std::string(to_string(cls.tag)), containing_shape(p)) << p.str();
        bool exact = std::any_of(kDisplayed.begin(), kDisplayed.end(), [&](const auto &s) { return s.second == p.str(); });
        EXPECT_EQ(cls.exact_catalogue_match, exact) << p.str();
    }
}

TEST(coupling_shapes, literal_condition_and_catalogue_disagreements_are_frozen) {
    std::vector<std::string> literal_only, catalogue_only;
    for (int mask = 1; mask < 64; mask++) {
        BlockPattern p = offdiagonal_pattern(mask);
        auto cls = admissible_3x3(p);
        if (cls.conditions_hold() && !cls.admissible()) {
            literal_only.push_back(p.str());
        }
        if (!cls.conditions_hold() && cls.admissible()) {
            catalogue_only.push_back(p.str());
        }
    }
    std::sort(literal_only.begin(), literal_only.end());
    std::sort(catalogue_only.begin(), catalogue_only.end());
    EXPECT_EQ(literal_only, (std::vector<std::string>{"000;000;110", "000;100;110", "001;000;110", "001;100;110"}));
    EXPECT_EQ(catalogue_only, (std::vector<std::string>{"000;001;100", "010;001;100"}));
}

TEST(coupling_shapes, diagonal_and_mixed_patterns) {
    for (int mask = 0; mask < 512; mask++) {
        BlockPattern p(3);
        for (int k = 0; k < 9; k++) {
            p.set(k / 3, k % 3, mask >> k & 1);
        }
        auto cls = admissible_3x3(p);
        if (p.offdiagonal_zero()) {
            EXPECT_EQ(cls.tag, ShapeTag3x3::kDiagonal) << p.str();
        } else if (!p.diagonal_zero()) {
            EXPECT_EQ(cls.tag, ShapeTag3x3::kInadmissible) << p.str();
        }
    }
}

TEST(coupling_shapes, topology_mapping) {
    using T = TopologyTag;
    using S = ShapeTag3x3;
    EXPECT_EQ(classify_topology(S::kW1), T::kCascade);
    EXPECT_EQ(classify_topology(S::kW2), T::kCascade);
    EXPECT_EQ(classify_topology(S::kW3), T::kIndependentProbability);
    EXPECT_EQ(classify_topology(S::kW4), T::kIndependentProbability);
    EXPECT_EQ(classify_topology(S::kW5), T::kIndependentProbability);
    EXPECT_EQ(classify_topology(S::kW6), T::kFrozenUnderInit);
    EXPECT_EQ(classify_topology(S::kW7), T::kTwoEntry);
    EXPECT_EQ(classify_topology(S::kW8), T::kTwoEntry);
    EXPECT_EQ(classify_topology(S::kW9), T::kSingleFocus);
    EXPECT_EQ(classify_topology(S::kW10), T::kSingleFocus);
    EXPECT_EQ(classify_topology(S::kW11), T::kTwoEntry);
    EXPECT_THROW(classify_topology(S::kDiagonal), std::invalid_argument);
    EXPECT_THROW(classify_topology(S::kInadmissible), std::invalid_argument);
}

TEST(coupling_shapes, topology_tags_match_rate_equation_structure) {
    Rng rng(31);
    auto cat = enumerate_admissible_patterns(3);
    for (size_t k = 0; k < cat.size(); k++) {
        auto tag = static_cast<ShapeTag3x3>(k);
        CouplingOperator v = instantiate_pattern(cat[k].pattern, 3, rng);
        EXPECT_TRUE(topology_predicate(classify_topology(tag), rate_jacobian(v))) << cat[k].label;
    }
}

TEST(coupling_shapes, single_focus_shape_freezes_third_event) {
    Rng rng(32);
    CouplingOperator v = instantiate_pattern(BlockPattern::parse("010;100;000"), 3, rng);
    std::vector<CouplingOperator> vs{v};
    for (int trial = 0; trial < 20; trial++) {
        auto rates = classical_rate_equations(random_hybrid_state(3, 3, rng), vs);
        EXPECT_EQ(rates[2], 0.0);
    }
}

TEST(coupling_shapes, instantiated_catalogue_passes_cp_check) {
    Rng rng(33);
    for (int dim : {2, 3}) {
        for (const auto &e : enumerate_admissible_patterns(dim)) {
            for (int d : {3, 4}) {
                std::vector<CouplingOperator> vs{instantiate_pattern(e.pattern, d, rng)};
                EXPECT_EQ(BlockPattern::of(vs[0]), e.pattern);
                EXPECT_TRUE(check_cp_conditions(vs, {}).ok()) << e.label << " d=" << d;
            }
        }
    }
}

TEST(coupling_shapes, instantiate_needs_room_for_orthogonal_projectors) {
    Rng rng(34);
    EXPECT_THROW(instantiate_pattern(BlockPattern::parse("001;100;010"), 2, rng), std::invalid_argument);
}

TEST(coupling_shapes, classification_from_operator) {
    Rng rng(35);
    CouplingOperator v = instantiate_pattern(BlockPattern::parse("001;100;010"), 3, rng);
    EXPECT_EQ(admissible_3x3(v).tag, ShapeTag3x3::kW1);
    CouplingOperator w = instantiate_pattern(BlockPattern::parse("01;10"), 2, rng);
    EXPECT_EQ(*admissible_2x2(w).tag, ShapeTag2x2::kAntidiagonal);
}
