#include "r110/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace r110 {

void LatticeConfig::validate(double v_max) const {
    if (width <= 0 || width % kEtherSpatialPeriod != 0)
        throw std::invalid_argument("lattice width must be a positive multiple of " +
                                    std::to_string(kEtherSpatialPeriod));
    if (steps <= 0)
        throw std::invalid_argument("lattice steps must be positive");
    if (v_max <= 0.0)
        throw std::invalid_argument("v_max must be positive");
    int bound = static_cast<int>(std::floor(width / (2.0 * v_max)));
    if (steps > bound)
        throw std::invalid_argument("steps " + std::to_string(steps) +
                                    " exceeds window bound " + std::to_string(bound) +
                                    " for width " + std::to_string(width));
}

Row step_reference(const Row& r) {
    int n = r.width();
    Row out(n);
    for (int i = 0; i < n; ++i) {
        int l = r.cell(i == 0 ? n - 1 : i - 1);
        int c = r.cell(i);
        int rr = r.cell(i == n - 1 ? 0 : i + 1);
        if (kRuleTable[(l << 2) | (c << 1) | rr])
            out.set(i, 1);
    }
    return out;
}

void step_into(const Row& in, Row& out) {
    const int n = in.width();
    if (out.width() != n)
        out = Row(n);
    const auto& w = in.words();
    auto& o = out.words();
    const int nw = static_cast<int>(w.size());
    const int top = (n - 1) & 63;  // bit index of the last cell within its word
    const uint64_t wrap_hi = (w[static_cast<size_t>(nw - 1)] >> top) & 1u;  // cell n-1
    const uint64_t wrap_lo = w[0] & 1u;                                     // cell 0
    for (int j = 0; j < nw; ++j) {
        const uint64_t c = w[static_cast<size_t>(j)];
        // l[i] = cell i-1, r[i] = cell i+1, cyclic
        uint64_t l = (c << 1) | (j > 0 ? (w[static_cast<size_t>(j - 1)] >> 63) : wrap_hi);
        uint64_t rgt;
        if (j < nw - 1)
            rgt = (c >> 1) | (w[static_cast<size_t>(j + 1)] << 63);
        else
            rgt = (c >> 1) | (wrap_lo << top);
        o[static_cast<size_t>(j)] = (~l & (c | rgt)) | (l & (c ^ rgt));
    }
    o[static_cast<size_t>(nw - 1)] &= in.tail_mask();
}

Row step(const Row& r) {
    Row out(r.width());
    step_into(r, out);
    return out;
}

SpacetimeDiagram evolve(const Row& r0, int steps) {
    if (steps < 0)
        throw std::invalid_argument("evolve: steps must be nonnegative");
    SpacetimeDiagram d;
    d.rows.reserve(static_cast<size_t>(steps) + 1);
    d.rows.push_back(r0);
    for (int t = 0; t < steps; ++t) {
        d.rows.emplace_back(r0.width());
        step_into(d.rows[static_cast<size_t>(t)], d.rows[static_cast<size_t>(t) + 1]);
    }
    return d;
}

Row flip(const Row& r, int x) {
    if (x < 0 || x >= r.width())
        throw std::out_of_range("flip: site index out of range");
    Row out = r;
    out.toggle(x);
    return out;
}

SpacetimeDiagram diff(const SpacetimeDiagram& a, const SpacetimeDiagram& b) {
    if (a.rows.size() != b.rows.size() || a.width() != b.width())
        throw std::invalid_argument("diff: dimension mismatch");
    SpacetimeDiagram d;
    d.rows.reserve(a.rows.size());
    for (size_t t = 0; t < a.rows.size(); ++t)
        d.rows.push_back(xor_rows(a.rows[t], b.rows[t]));
    return d;
}

}  // namespace r110
