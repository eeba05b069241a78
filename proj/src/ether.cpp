#include "r110/ether.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

namespace r110 {

namespace {

constexpr int kP = kEtherSpatialPeriod;

int primitive_spatial_period(const Row& r) {
    for (int s = 1; s <= kP; ++s) {
        if (kP % s != 0)
            continue;
        bool ok = true;
        for (int i = 0; i < kP && ok; ++i)
            ok = r.cell(i) == r.cell(i % s);
        if (ok)
            return s;
    }
    return kP;
}

// First t <= 14 at which the evolved row is a rotation of r; returns (t, shift).
std::optional<std::pair<int, int>> shift_recurrence(const Row& r) {
    Row cur = r;
    for (int t = 1; t <= kP; ++t) {
        cur = step(cur);
        for (int k = 0; k < kP; ++k)
            if (cur == rotated(r, k))
                return std::make_pair(t, k);
    }
    return std::nullopt;
}

std::string lex_min_of_cycle(const Row& r, int tau) {
    Row cur = r;
    std::string best;
    for (int t = 0; t < tau; ++t) {
        for (int k = 0; k < kP; ++k) {
            std::string s = rotated(cur, k).to_string();
            if (best.empty() || s < best)
                best = s;
        }
        cur = step(cur);
    }
    return best;
}

}  // namespace

Row EtherTile::tile_row() const {
    Row r(kP);
    for (int i = 0; i < kP; ++i)
        if (cells[static_cast<size_t>(i)])
            r.set(i, 1);
    return r;
}

EtherTile derive_ether() {
    std::optional<std::tuple<int, std::string>> best;  // (tau, canonical cells)
    for (int v = 1; v < (1 << kP) - 1; ++v) {
        Row r(kP);
        for (int i = 0; i < kP; ++i)
            if ((v >> i) & 1)
                r.set(i, 1);
        if (primitive_spatial_period(r) != kP)
            continue;
        auto rec = shift_recurrence(r);
        if (!rec)
            continue;
        auto [tau, shift] = *rec;
        (void)shift;
        std::string canon = lex_min_of_cycle(r, tau);
        if (!best || tau < std::get<0>(*best) ||
            (tau == std::get<0>(*best) && canon < std::get<1>(*best)))
            best = std::make_tuple(tau, canon);
    }
    if (!best)
        throw std::logic_error("ether search failed: no period-14 background found");

    EtherTile tile;
    const std::string& canon = std::get<1>(*best);
    for (int i = 0; i < kP; ++i)
        tile.cells[static_cast<size_t>(i)] = canon[static_cast<size_t>(i)] == '1';
    tile.temporal_period = std::get<0>(*best);
    auto rec = shift_recurrence(tile.tile_row());
    tile.drift = rec->second;
    return tile;
}

const EtherTile& ether() {
    static const EtherTile tile = [] {
        EtherTile t = derive_ether();
        // Embedded reference for the searched background.
        static constexpr char kCells[] = "00010011011111";
        if (t.tile_row().to_string() != kCells || t.temporal_period != 1 || t.drift != 10)
            throw std::logic_error("ether search disagrees with the embedded constant");
        return t;
    }();
    return tile;
}

Row ether_row(int width, const EtherPhase& phase) {
    if (width <= 0 || width % kP != 0)
        throw std::invalid_argument("ether_row: width must be a positive multiple of 14");
    const EtherTile& tile = ether();
    EtherPhase ph = canonical_phase(tile, phase.spatial_offset, phase.temporal_offset);
    Row cycle_row = tile.tile_row();
    for (int t = 0; t < ph.temporal_offset; ++t)
        cycle_row = step(cycle_row);
    Row out(width);
    for (int i = 0; i < width; ++i) {
        int col = (i - ph.spatial_offset) % kP;
        if (col < 0)
            col += kP;
        if (cycle_row.cell(col))
            out.set(i, 1);
    }
    return out;
}

EtherPhase canonical_phase(const EtherTile& tile, int spatial_offset, int temporal_offset) {
    EtherPhase ph;
    ph.spatial_offset = ((spatial_offset % kP) + kP) % kP;
    int tau = tile.temporal_period;
    ph.temporal_offset = ((temporal_offset % tau) + tau) % tau;
    return ph;
}

}  // namespace r110
