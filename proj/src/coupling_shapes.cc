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

#include <array>
#include <stdexcept>
#include <utility>

namespace qclink {

namespace {

using Cell = std::pair<int, int>;

struct Conjunct {
    const char *text;
    Cell first;
    Cell second;
};

// V = [[a, b], [c, d]].
constexpr std::array<Conjunct, 4> kTwoStateConjuncts{{
    {"(a=0 or b=0)", {0, 0}, {0, 1}},
    {"(c=0 or d=0)", {1, 0}, {1, 1}},
    {"(a=0 or c=0)", {0, 0}, {1, 0}},
    {"(b=0 or d=0)", {0, 1}, {1, 1}},
}};

// Written with 1-based block names a_rc; cells are 0-based.
constexpr std::array<Conjunct, 6> kThreeStateConjuncts{{
    {"(a31=0 or a23=0)", {2, 0}, {1, 2}},
    {"(a21=0 or a23=0)", {1, 0}, {1, 2}},
    {"(a12=0 or a13=0)", {0, 1}, {0, 2}},
    {"(a12=0 or a32=0)", {0, 1}, {2, 1}},
    {"(a23=0 or a13=0)", {1, 2}, {0, 2}},
    {"(a13=0 or a23=0)", {0, 2}, {1, 2}},
}};

struct ShapeDef {
    ShapeTag3x3 tag;
    std::vector<Cell> support;
};

const std::vector<ShapeDef> &three_state_shapes() {
    static const std::vector<ShapeDef> shapes{
        {ShapeTag3x3::kW1, {{0, 2}, {1, 0}, {2, 1}}},
        {ShapeTag3x3::kW2, {{0, 1}, {1, 2}, {2, 0}}},
        {ShapeTag3x3::kW3, {{0, 2}, {1, 0}, {2, 0}}},
        {ShapeTag3x3::kW4, {{0, 1}, {1, 0}, {2, 0}}},
        {ShapeTag3x3::kW5, {{0, 2}, {2, 1}}},
        {ShapeTag3x3::kW6, {{1, 2}, {2, 1}}},
        {ShapeTag3x3::kW7, {{0, 1}, {1, 2}}},
        {ShapeTag3x3::kW8, {{1, 0}, {2, 0}}},
        {ShapeTag3x3::kW9, {{0, 1}, {1, 0}}},
        {ShapeTag3x3::kW10, {{0, 2}, {2, 0}}},
        {ShapeTag3x3::kW11, {{0, 2}, {2, 0}}},
    };
    return shapes;
}

struct Shape2Def {
    ShapeTag2x2 tag;
    std::vector<Cell> support;
};

// Display order of the six 2x2 shapes.
const std::vector<Shape2Def> &two_state_shapes() {
    static const std::vector<Shape2Def> shapes{
        {ShapeTag2x2::kAntidiagonal, {{0, 1}, {1, 0}}},
        {ShapeTag2x2::kDiagonalPartialD, {{1, 1}}},
        {ShapeTag2x2::kUpperOnly, {{0, 1}}},
        {ShapeTag2x2::kDiagonal, {{0, 0}, {1, 1}}},
        {ShapeTag2x2::kDiagonalPartialA, {{0, 0}}},
        {ShapeTag2x2::kLowerOnly, {{1, 0}}},
    };
    return shapes;
}

BlockPattern pattern_from(int dim, const std::vector<Cell> &support) {
    BlockPattern p(dim);
    for (auto [r, c] : support) {
        p.set(r, c);
    }
    return p;
}

}  // namespace

BlockPattern::BlockPattern(int dim) : dim_(dim), cells_(static_cast<size_t>(dim) * dim, false) {
    if (dim < 1) {
        throw std::invalid_argument("BlockPattern: dimension must be positive");
    }
}

BlockPattern BlockPattern::parse(std::string_view text) {
    std::vector<std::string> rows{""};
    for (char ch : text) {
        if (ch == ';') {
            rows.emplace_back();
        } else if (ch == '0' || ch == '1') {
            rows.back().push_back(ch);
        } else if (ch != ' ') {
            throw std::invalid_argument("BlockPattern::parse: unexpected character '" + std::string(1, ch) + "'");
        }
    }
    int n = static_cast<int>(rows.size());
    BlockPattern p(n);
    for (int r = 0; r < n; r++) {
        if (static_cast<int>(rows[r].size()) != n) {
            throw std::invalid_argument("BlockPattern::parse: pattern must be square, got '" + std::string(text) + "'");
        }
        for (int c = 0; c < n; c++) {
            p.set(r, c, rows[r][c] == '1');
        }
    }
    return p;
}

BlockPattern BlockPattern::of(const CouplingOperator &v, double threshold) {
    BlockPattern p(v.classical_dim());
    for (int r = 0; r < p.dim(); r++) {
        for (int c = 0; c < p.dim(); c++) {
            p.set(r, c, max_abs_entry(v.block(r, c)) > threshold);
        }
    }
    return p;
}

bool BlockPattern::operator()(int row, int col) const {
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_) {
        throw std::out_of_range("BlockPattern: index out of range");
    }
    return cells_[static_cast<size_t>(row) * dim_ + col];
}

void BlockPattern::set(int row, int col, bool nonzero) {
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_) {
        throw std::out_of_range("BlockPattern: index out of range");
    }
    cells_[static_cast<size_t>(row) * dim_ + col] = nonzero;
}

int BlockPattern::count() const {
    int k = 0;
    for (bool b : cells_) {
        k += b ? 1 : 0;
    }
    return k;
}

bool BlockPattern::diagonal_zero() const {
    for (int k = 0; k < dim_; k++) {
        if ((*this)(k, k)) {
            return false;
        }
    }
    return true;
}

bool BlockPattern::offdiagonal_zero() const {
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            if (r != c && (*this)(r, c)) {
                return false;
            }
        }
    }
    return true;
}

bool BlockPattern::subset_of(const BlockPattern &other) const {
    if (other.dim_ != dim_) {
        return false;
    }
    for (size_t k = 0; k < cells_.size(); k++) {
        if (cells_[k] && !other.cells_[k]) {
            return false;
        }
    }
    return true;
}

std::string BlockPattern::str() const {
    std::string out;
    for (int r = 0; r < dim_; r++) {
        if (r > 0) {
            out.push_back(';');
        }
        for (int c = 0; c < dim_; c++) {
            out.push_back((*this)(r, c) ? '1' : '0');
        }
    }
    return out;
}

std::string_view to_string(ShapeTag2x2 tag) {
    switch (tag) {
        case ShapeTag2x2::kAntidiagonal:
            return "ANTIDIAGONAL";
        case ShapeTag2x2::kLowerOnly:
            return "LOWER_ONLY";
        case ShapeTag2x2::kUpperOnly:
            return "UPPER_ONLY";
        case ShapeTag2x2::kDiagonal:
            return "DIAGONAL";
        case ShapeTag2x2::kDiagonalPartialA:
            return "DIAGONAL_PARTIAL_A";
        case ShapeTag2x2::kDiagonalPartialD:
            return "DIAGONAL_PARTIAL_D";
    }
    return "?";
}

std::string_view to_string(ShapeTag3x3 tag) {
    static constexpr std::array<std::string_view, 13> names{
        "W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8", "W9", "W10", "W11", "DIAGONAL", "INADMISSIBLE"};
    return names.at(static_cast<size_t>(tag));
}

std::string_view to_string(TopologyTag tag) {
    switch (tag) {
        case TopologyTag::kCascade:
            return "CASCADE";
        case TopologyTag::kIndependentProbability:
            return "INDEPENDENT_PROBABILITY";
        case TopologyTag::kFrozenUnderInit:
            return "FROZEN_UNDER_INIT";
        case TopologyTag::kTwoEntry:
            return "TWO_ENTRY";
        case TopologyTag::kSingleFocus:
            return "SINGLE_FOCUS";
    }
    return "?";
}

Classification2x2 admissible_2x2(const BlockPattern &pattern) {
    if (pattern.dim() != 2) {
        throw std::invalid_argument("admissible_2x2: classical dimension must be 2");
    }
    Classification2x2 out;
    for (const auto &cj : kTwoStateConjuncts) {
        if (pattern(cj.first.first, cj.first.second) && pattern(cj.second.first, cj.second.second)) {
            out.violated.emplace_back(cj.text);
        }
    }
    if (!out.violated.empty()) {
        return out;
    }
    if (pattern.count() == 0) {
        out.tag = ShapeTag2x2::kDiagonal;
        return out;
    }
    for (const auto &shape : two_state_shapes()) {
        if (pattern == pattern_from(2, shape.support)) {
            out.tag = shape.tag;
            return out;
        }
    }
    // Unreachable: every pattern satisfying the condition is a catalogue shape.
    throw std::logic_error("admissible_2x2: admissible pattern missing from catalogue: " + pattern.str());
}

Classification2x2 admissible_2x2(const CouplingOperator &v, double threshold) {
    return admissible_2x2(BlockPattern::of(v, threshold));
}

std::vector<std::string> violated_three_state_conditions(const BlockPattern &pattern) {
    if (pattern.dim() != 3) {
        throw std::invalid_argument("violated_three_state_conditions: classical dimension must be 3");
    }
    std::vector<std::string> out;
    for (const auto &cj : kThreeStateConjuncts) {
        if (pattern(cj.first.first, cj.first.second) && pattern(cj.second.first, cj.second.second)) {
            out.emplace_back(cj.text);
        }
    }
    return out;
}

Classification3x3 admissible_3x3(const BlockPattern &pattern) {
    if (pattern.dim() != 3) {
        throw std::invalid_argument("admissible_3x3: classical dimension must be 3");
    }
    Classification3x3 out;
    out.violated = violated_three_state_conditions(pattern);
    if (pattern.offdiagonal_zero()) {
        out.tag = ShapeTag3x3::kDiagonal;
        out.exact_catalogue_match = true;
        return out;
    }
    if (!pattern.diagonal_zero()) {
        out.tag = ShapeTag3x3::kInadmissible;
        return out;
    }
    const ShapeDef *best = nullptr;
    for (const auto &shape : three_state_shapes()) {
        if (!pattern.subset_of(pattern_from(3, shape.support))) {
            continue;
        }
        if (best == nullptr || shape.support.size() < best->support.size()) {
            best = &shape;
        }
    }
    if (best == nullptr) {
        out.tag = ShapeTag3x3::kInadmissible;
        return out;
    }
    out.tag = best->tag;
    out.exact_catalogue_match = static_cast<int>(best->support.size()) == pattern.count();
    return out;
}

Classification3x3 admissible_3x3(const CouplingOperator &v, double threshold) {
    return admissible_3x3(BlockPattern::of(v, threshold));
}

TopologyTag classify_topology(ShapeTag3x3 tag) {
    switch (tag) {
        case ShapeTag3x3::kW1:
        case ShapeTag3x3::kW2:
            return TopologyTag::kCascade;
        case ShapeTag3x3::kW3:
        case ShapeTag3x3::kW4:
        case ShapeTag3x3::kW5:
            return TopologyTag::kIndependentProbability;
        case ShapeTag3x3::kW6:
            return TopologyTag::kFrozenUnderInit;
        case ShapeTag3x3::kW7:
        case ShapeTag3x3::kW8:
        case ShapeTag3x3::kW11:
            return TopologyTag::kTwoEntry;
        case ShapeTag3x3::kW9:
        case ShapeTag3x3::kW10:
            return TopologyTag::kSingleFocus;
        case ShapeTag3x3::kDiagonal:
        case ShapeTag3x3::kInadmissible:
            break;
    }
    throw std::invalid_argument("classify_topology: no topology for " + std::string(to_string(tag)));
}

std::vector<CatalogueEntry> enumerate_admissible_patterns(int classical_dim) {
    std::vector<CatalogueEntry> out;
    if (classical_dim == 2) {
        for (const auto &shape : two_state_shapes()) {
            auto name = std::string(to_string(shape.tag));
            out.push_back({name, name, pattern_from(2, shape.support), std::nullopt, true});
        }
        return out;
    }
    if (classical_dim == 3) {
        for (const auto &shape : three_state_shapes()) {
            auto name = std::string(to_string(shape.tag));
            auto pattern = pattern_from(3, shape.support);
            std::optional<std::string> dup;
            for (const auto &prev : out) {
                if (prev.pattern == pattern) {
                    dup = prev.label;
                    break;
                }
            }
            bool holds = violated_three_state_conditions(pattern).empty();
            out.push_back({name, name, std::move(pattern), dup, holds});
        }
        return out;
    }
    throw std::invalid_argument(
        "enumerate_admissible_patterns: unsupported classical dimension " + std::to_string(classical_dim) +
        " (supported: 2, 3)");
}

CouplingOperator instantiate_pattern(const BlockPattern &pattern, int quantum_dim, Rng &rng) {
    int needed = pattern.count();
    if (needed > quantum_dim) {
        throw std::invalid_argument(
            "instantiate_pattern: need quantum_dim >= " + std::to_string(needed) + " for mutually orthogonal blocks");
    }
    auto projectors = random_orthogonal_projectors(quantum_dim, needed, rng);
    std::uniform_real_distribution<double> strength(0.5, 1.5);
    CouplingOperator v(pattern.dim(), quantum_dim);
    int k = 0;
    for (int r = 0; r < pattern.dim(); r++) {
        for (int c = 0; c < pattern.dim(); c++) {
            if (pattern(r, c)) {
                v.set_block(r, c, strength(rng) * projectors[k++].matrix());
            }
        }
    }
    return v;
}

}  // namespace qclink
