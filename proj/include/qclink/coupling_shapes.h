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

#ifndef QCLINK_COUPLING_SHAPES_H
#define QCLINK_COUPLING_SHAPES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qclink/lindblad.h"

namespace qclink {

/// Zero/nonzero pattern of the blocks of a coupling operator. Indices are
/// 0-based, so the block usually written a_12 is (0, 1).
class BlockPattern {
   public:
    explicit BlockPattern(int dim);

    /// Rows separated by ';', one '0'/'1' character per block, e.g. "01;10".
    static BlockPattern parse(std::string_view text);
    /// A block counts as nonzero when its largest entry exceeds `threshold`.
    static BlockPattern of(const CouplingOperator &v, double threshold = 1e-12);

    int dim() const {
        return dim_;
    }
    bool operator()(int row, int col) const;
    void set(int row, int col, bool nonzero = true);
    int count() const;
    bool diagonal_zero() const;
    bool offdiagonal_zero() const;
    /// True if every nonzero block of this pattern is also nonzero in `other`.
    bool subset_of(const BlockPattern &other) const;
    std::string str() const;

    bool operator==(const BlockPattern &other) const = default;

   private:
    int dim_;
    std::vector<bool> cells_;
};

enum class ShapeTag2x2 {
    kAntidiagonal,       // [[0, b], [c, 0]]
    kLowerOnly,          // [[0, 0], [c, 0]]
    kUpperOnly,          // [[0, b], [0, 0]]
    kDiagonal,           // [[a, 0], [0, d]], including V = 0
    kDiagonalPartialA,   // [[a, 0], [0, 0]]
    kDiagonalPartialD,   // [[0, 0], [0, d]]
};

enum class ShapeTag3x3 { kW1, kW2, kW3, kW4, kW5, kW6, kW7, kW8, kW9, kW10, kW11, kDiagonal, kInadmissible };

enum class TopologyTag { kCascade, kIndependentProbability, kFrozenUnderInit, kTwoEntry, kSingleFocus };

std::string_view to_string(ShapeTag2x2 tag);
std::string_view to_string(ShapeTag3x3 tag);
std::string_view to_string(TopologyTag tag);

struct Classification2x2 {
    std::optional<ShapeTag2x2> tag;
    /// Conjuncts of the 2x2 admissibility condition that fail, e.g. "(a=0 or b=0)".
    std::vector<std::string> violated;

    bool admissible() const {
        return tag.has_value();
    }
};

/// The 2x2 condition ((a=0 or b=0) and (c=0 or d=0)) and ((a=0 or c=0) and
/// (b=0 or d=0)) with V = [[a, b], [c, d]]. Its solutions are exactly the six
/// catalogue shapes.
Classification2x2 admissible_2x2(const BlockPattern &pattern);
Classification2x2 admissible_2x2(const CouplingOperator &v, double threshold = 1e-12);

struct Classification3x3 {
    ShapeTag3x3 tag = ShapeTag3x3::kInadmissible;
    /// The pattern equals a catalogue matrix rather than a degenerate
    /// instance of one (some displayed entries zero).
    bool exact_catalogue_match = false;
    /// Conjuncts of the three-state admissibility condition that fail, as
    /// evaluated literally.
    std::vector<std::string> violated;

    bool conditions_hold() const {
        return violated.empty();
    }
    bool admissible() const {
        return tag != ShapeTag3x3::kInadmissible;
    }
};

/// Literal evaluation of the six conjuncts of the three-state condition on
/// the off-diagonal blocks. Returns the conjuncts that fail.
std::vector<std::string> violated_three_state_conditions(const BlockPattern &pattern);

/// Classifies a 3x3 pattern against the W1..W11 catalogue.
///
/// The tag is the catalogue shape whose support contains the pattern
/// (smallest support first, then catalogue order). Patterns with no
/// off-diagonal block are DIAGONAL; patterns mixing diagonal and off-diagonal
/// blocks, or not contained in any shape, are INADMISSIBLE. The literal
/// condition is reported alongside in `violated`; the two disagree on a few
/// patterns (see enumerate_admissible_patterns).
Classification3x3 admissible_3x3(const BlockPattern &pattern);
Classification3x3 admissible_3x3(const CouplingOperator &v, double threshold = 1e-12);

/// Throws std::invalid_argument for INADMISSIBLE and DIAGONAL.
TopologyTag classify_topology(ShapeTag3x3 tag);

struct CatalogueEntry {
    std::string label;   // "c1", "W7", ...
    std::string tag;     // to_string of the shape tag
    BlockPattern pattern;
    /// Label of an earlier entry with an identical pattern, if any.
    std::optional<std::string> duplicate_of;
    /// Literal admissibility condition holds for this pattern.
    bool conditions_hold = true;
};

/// The catalogue of admissible shapes: six 2x2 shapes, or the eleven 3x3
/// entries W1..W11 (W11 is flagged as a duplicate of W10).
std::vector<CatalogueEntry> enumerate_admissible_patterns(int classical_dim);

/// Builds a coupling operator with the given pattern. Each nonzero block is a
/// random positive constant times its own rank-one projector; the projectors
/// are mutually orthogonal. Requires quantum_dim >= pattern.count().
CouplingOperator instantiate_pattern(const BlockPattern &pattern, int quantum_dim, Rng &rng);

}  // namespace qclink

#endif
