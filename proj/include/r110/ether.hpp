#pragma once

#include <array>
#include <cstdint>

#include "r110/engine.hpp"
#include "r110/row.hpp"

namespace r110 {

/// The periodic background of Rule 110: a 14-cell tile whose tiling
/// reproduces itself, cyclically shifted by `drift`, every
/// `temporal_period` steps.
struct EtherTile {
    std::array<uint8_t, kEtherSpatialPeriod> cells{};
    int temporal_period = 0;
    int drift = 0;  // cells shifted toward higher indices per temporal_period steps

    Row tile_row() const;  // the tile as a width-14 row
};

/// Alignment of a background tiling against a concrete row.
struct EtherPhase {
    int spatial_offset = 0;   // 0..13
    int temporal_offset = 0;  // 0..temporal_period-1

    bool operator==(const EtherPhase&) const = default;
};

/// Brute-force search over 14-cell tiles: evolve each candidate on a
/// 14-ring and look for shift-recurrence within 14 steps. Returns the
/// tile with full spatial period 14 and minimal temporal period,
/// canonicalized to the lexicographically smallest row of its cycle.
/// Throws std::logic_error if the search comes up empty.
EtherTile derive_ether();

/// Cached derive_ether() result, cross-checked against the embedded
/// constant once per process.
const EtherTile& ether();

/// Background row: cell i = tile cycle row `temporal_offset`, column
/// (i - spatial_offset) mod 14. Width must be a positive multiple of 14.
Row ether_row(int width, const EtherPhase& phase = {});

/// Reduce offsets into canonical ranges.
EtherPhase canonical_phase(const EtherTile& tile, int spatial_offset, int temporal_offset);

}  // namespace r110
