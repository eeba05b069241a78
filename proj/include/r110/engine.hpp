#pragma once

#include <vector>

#include "r110/row.hpp"

namespace r110 {

/// Rule 110 output table indexed by (left<<2 | center<<1 | right).
inline constexpr int kRuleTable[8] = {0, 1, 1, 1, 0, 1, 1, 0};

/// Spatial period of the background pattern; lattice widths are multiples of this.
inline constexpr int kEtherSpatialPeriod = 14;

struct LatticeConfig {
    int width = 0;  // N, cells
    int steps = 0;  // T, time steps

    /// Throws std::invalid_argument unless width is a positive multiple of 14
    /// and steps fits the evolution window: steps <= floor(width / (2 * v_max)).
    void validate(double v_max) const;

    bool operator==(const LatticeConfig&) const = default;
};

/// Rows 0..T of an evolution; row 0 is the initial state.
struct SpacetimeDiagram {
    std::vector<Row> rows;

    int width() const { return rows.empty() ? 0 : rows.front().width(); }
    int steps() const { return static_cast<int>(rows.size()) - 1; }
};

/// Cell-by-cell rule application. Reference implementation, kept as the
/// oracle for the packed fast path.
Row step_reference(const Row& r);

/// Word-parallel step: next = (~L & (C | R)) | (L & (C ^ R)).
/// Identical output to step_reference for every input.
Row step(const Row& r);

/// In-place variant of the packed step; out is resized to match.
void step_into(const Row& in, Row& out);

SpacetimeDiagram evolve(const Row& r0, int steps);

/// Copy of r with the bit at site x inverted. x is a lattice index.
Row flip(const Row& r, int x);

/// Cellwise XOR of two diagrams of equal dimensions.
SpacetimeDiagram diff(const SpacetimeDiagram& a, const SpacetimeDiagram& b);

}  // namespace r110
