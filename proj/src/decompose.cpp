#include "r110/decompose.hpp"

#include <cstdio>

#include "segments.hpp"

namespace r110 {
namespace {

/// FNV-1a over the phase key, folded to 8 hex digits.
std::string residual_tag(const std::string& key) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<uint32_t>(h ^ (h >> 32)));
    return std::string("U:") + buf;
}

}  // namespace

std::vector<std::string> Decomposition::ids() const {
    std::vector<std::string> out;
    out.reserve(particles.size());
    for (const auto& p : particles)
        out.push_back(p.id);
    return out;
}

bool Decomposition::clean() const {
    if (turbulent)
        return false;
    for (const auto& p : particles)
        if (p.phase < 0)
            return false;
    return true;
}

std::vector<Row> ether_backdrops(int width) {
    const EtherTile& tile = ether();
    std::vector<Row> out;
    out.reserve(static_cast<size_t>(tile.temporal_period) * kEtherSpatialPeriod);
    for (int t = 0; t < tile.temporal_period; ++t)
        for (int s = 0; s < kEtherSpatialPeriod; ++s)
            out.push_back(ether_row(width, {s, t}));
    return out;
}

Decomposition decompose(const Row& r, const Catalog& catalog) {
    return decompose(r, catalog, ether_backdrops(r.width()));
}

Decomposition decompose(const Row& r, const Catalog& catalog, const std::vector<Row>& backdrops) {
    const int n = r.width();
    Decomposition out;

    int best_k = 0;
    int best_mismatch = n + 1;
    for (size_t k = 0; k < backdrops.size(); ++k) {
        int mm = hamming(r, backdrops[k]);
        if (mm < best_mismatch) {
            best_mismatch = mm;
            best_k = static_cast<int>(k);
        }
    }
    out.phase = {best_k % kEtherSpatialPeriod, best_k / kEtherSpatialPeriod};
    out.coverage = 1.0 - static_cast<double>(best_mismatch) / n;
    if (out.coverage < 0.5) {
        out.turbulent = true;
        return out;
    }

    auto pos = detail::mismatch_positions(r, backdrops[static_cast<size_t>(best_k)]);
    auto segs = detail::mismatch_segments(pos, n, kEtherSpatialPeriod);
    if (segs.empty())
        return out;

    // cut the ring after the longest clean run; ties fall to the run
    // ending at the smallest segment start
    const size_t m = segs.size();
    size_t first = 0;
    int best_gap = -1;
    for (size_t i = 0; i < m; ++i) {
        const auto& cur = segs[i];
        const auto& nxt = segs[(i + 1) % m];
        int gap = (nxt.start - (cur.start + cur.length) % n + n) % n;
        if (gap > best_gap || (gap == best_gap && nxt.start < segs[first].start)) {
            best_gap = gap;
            first = (i + 1) % m;
        }
    }

    const auto& lookup = catalog.phase_lookup();
    for (size_t i = 0; i < m; ++i) {
        const auto& seg = segs[(first + i) % m];
        int rho = ((seg.start - out.phase.spatial_offset) % kEtherSpatialPeriod +
                   kEtherSpatialPeriod) %
                  kEtherSpatialPeriod;
        std::string key = std::to_string(rho) + ":" + detail::read_cyclic(r, seg.start, seg.length);
        Particle p;
        p.position = seg.start;
        p.width = seg.length;
        auto it = lookup.find(key);
        if (it != lookup.end()) {
            p.id = catalog.gliders[static_cast<size_t>(it->second.first)].id;
            p.phase = it->second.second;
        } else {
            p.id = residual_tag(key);
            p.phase = -1;
        }
        out.particles.push_back(std::move(p));
    }
    return out;
}

}  // namespace r110
