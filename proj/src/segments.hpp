#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "r110/row.hpp"

namespace r110::detail {

/// Cyclic interval of cells; start in [0, width), may wrap past the end.
struct CyclicSegment {
    int start = 0;
    int length = 0;
};

/// Positions of set bits in (row XOR backdrop).
inline std::vector<int> mismatch_positions(const Row& row, const Row& backdrop) {
    std::vector<int> out;
    const auto& a = row.words();
    const auto& b = backdrop.words();
    for (size_t j = 0; j < a.size(); ++j) {
        uint64_t m = a[j] ^ b[j];
        while (m) {
            int bit = std::countr_zero(m);
            out.push_back(static_cast<int>(j) * 64 + bit);
            m &= m - 1;
        }
    }
    return out;
}

/// Group mismatch positions into cyclic segments; runs separated by
/// fewer than `merge_gap` matching cells are treated as one segment.
/// Returns an empty list for a perfect match. A degenerate cover (no
/// gap of merge_gap anywhere on the ring) comes back as a single
/// segment spanning the whole ring.
inline std::vector<CyclicSegment> mismatch_segments(const std::vector<int>& pos, int width,
                                                    int merge_gap) {
    std::vector<CyclicSegment> segs;
    const int m = static_cast<int>(pos.size());
    if (m == 0)
        return segs;
    // indices whose following gap exceeds the merge threshold
    std::vector<int> splits;
    for (int i = 0; i < m; ++i) {
        int next = pos[static_cast<size_t>((i + 1) % m)];
        int gap = (next - pos[static_cast<size_t>(i)] + width) % width - 1;
        if (i == m - 1 && m == 1)
            gap = width - 1;
        if (gap >= merge_gap)
            splits.push_back(i);
    }
    if (splits.empty()) {
        segs.push_back({0, width});
        return segs;
    }
    for (size_t k = 0; k < splits.size(); ++k) {
        int from = (splits[(k + splits.size() - 1) % splits.size()] + 1) % m;
        int to = splits[k];
        int start = pos[static_cast<size_t>(from)];
        int end = pos[static_cast<size_t>(to)];
        segs.push_back({start, (end - start + width) % width + 1});
    }
    // order by start index for deterministic downstream handling
    std::sort(segs.begin(), segs.end(),
              [](const CyclicSegment& x, const CyclicSegment& y) { return x.start < y.start; });
    return segs;
}

inline std::string read_cyclic(const Row& row, int start, int length) {
    std::string s(static_cast<size_t>(length), '0');
    int n = row.width();
    for (int j = 0; j < length; ++j)
        if (row.cell((start + j) % n))
            s[static_cast<size_t>(j)] = '1';
    return s;
}

}  // namespace r110::detail
