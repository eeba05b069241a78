#include "r110/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "segments.hpp"

namespace r110 {
namespace {

int mod14(int x) {
    int m = x % kEtherSpatialPeriod;
    return m < 0 ? m + kEtherSpatialPeriod : m;
}

std::string phase_key(const GliderPhase& ph) {
    return std::to_string(ph.rho) + ":" + ph.bits;
}

std::string cycle_encoding(const std::vector<GliderPhase>& phases) {
    std::string s;
    for (const auto& ph : phases) {
        s += phase_key(ph);
        s += ';';
    }
    return s;
}

/// Map a cyclic difference into (-n/2, n/2].
int norm_shift(int raw, int n) {
    int d = ((raw % n) + n) % n;
    if (d > n / 2)
        d -= n;
    return d;
}

struct TailStep {
    int start = 0;
    int rho = 0;
    std::string bits;
};

/// Residual of one row against the aligned background, provided it is a
/// single bounded block. Returns false for clean ether, multiple blocks,
/// or a degenerate cover.
bool extract_single(const Row& row, const Row& backdrop, int alignment, TailStep& out) {
    auto pos = detail::mismatch_positions(row, backdrop);
    if (pos.empty())
        return false;
    auto segs = detail::mismatch_segments(pos, row.width(), kEtherSpatialPeriod);
    if (segs.size() != 1 || segs[0].length > row.width() / 2)
        return false;
    out.start = segs[0].start;
    out.rho = mod14(segs[0].start - alignment);
    out.bits = detail::read_cyclic(row, segs[0].start, segs[0].length);
    return true;
}

bool order_before(const GliderSpec& a, const GliderSpec& b) {
    long long lhs = static_cast<long long>(a.displacement) * b.period;
    long long rhs = static_cast<long long>(b.displacement) * a.period;
    if (lhs != rhs)
        return lhs < rhs;
    if (a.period != b.period)
        return a.period < b.period;
    if (a.width() != b.width())
        return a.width() < b.width();
    return cycle_encoding(a.phases) < cycle_encoding(b.phases);
}

}  // namespace

int GliderSpec::width() const {
    size_t w = 0;
    for (const auto& ph : phases)
        w = std::max(w, ph.bits.size());
    return static_cast<int>(w);
}

double Catalog::v_max() const {
    double best = 0.0;
    for (const auto& g : gliders)
        best = std::max(best, std::fabs(g.velocity()));
    // no moving glider catalogued: fall back to the locality bound
    return best > 0.0 ? best : 1.0;
}

const GliderSpec* Catalog::find(const std::string& id) const {
    for (const auto& g : gliders)
        if (g.id == id)
            return &g;
    return nullptr;
}

int Catalog::index_of(const std::string& id) const {
    for (size_t i = 0; i < gliders.size(); ++i)
        if (gliders[i].id == id)
            return static_cast<int>(i);
    return -1;
}

void Catalog::finalize() {
    phase_lookup_.clear();
    for (size_t gi = 0; gi < gliders.size(); ++gi)
        for (size_t pi = 0; pi < gliders[gi].phases.size(); ++pi) {
            auto [it, fresh] = phase_lookup_.try_emplace(
                phase_key(gliders[gi].phases[pi]),
                std::make_pair(static_cast<int>(gi), static_cast<int>(pi)));
            if (!fresh)
                throw std::runtime_error("catalog phase " + it->first +
                                         " appears in more than one entry");
        }
}

Catalog derive_catalog(int max_width, int max_period, const CatalogSearchOptions& opts) {
    if (max_width <= 0 || max_period <= 0)
        throw std::invalid_argument("catalog bounds must be positive");
    if (opts.seed_width < 1 || opts.seed_width > 24)
        throw std::invalid_argument("seed_width out of range (1..24)");
    int horizon = std::max(opts.horizon, 3 * max_period);
    // the ring must hold the seed's full light cone plus slack, so that
    // outgoing debris cannot wrap around and fake a periodic residual
    int need_periods = (opts.seed_width + 2 * horizon) / kEtherSpatialPeriod + 2;
    int ring_periods = std::max(opts.ring_periods, need_periods);
    const int n = kEtherSpatialPeriod * ring_periods;

    const EtherTile& tile = ether();
    if (tile.temporal_period != 1)
        throw std::logic_error("catalog search assumes a shift-periodic background");

    std::vector<Row> backdrop;
    backdrop.reserve(kEtherSpatialPeriod);
    for (int s = 0; s < kEtherSpatialPeriod; ++s)
        backdrop.push_back(ether_row(n, {s, 0}));

    std::vector<Row> hist(static_cast<size_t>(horizon) + 1, Row(n));
    const int t1 = horizon - 2 * max_period;
    const int tail_len = horizon - t1 + 1;
    std::vector<TailStep> tail(static_cast<size_t>(tail_len));
    const int mid = (n / 2 / kEtherSpatialPeriod) * kEtherSpatialPeriod;

    // keyed by period/displacement plus the canonical phase cycle
    std::map<std::string, GliderSpec> found;

    for (int w = 1; w <= opts.seed_width; ++w) {
        for (uint32_t v = 0; v < (1u << w); ++v) {
            for (int q = 0; q < kEtherSpatialPeriod; ++q) {
                hist[0] = backdrop[0];
                bool differs = false;
                for (int j = 0; j < w; ++j) {
                    int idx = mid + q + j;
                    int bit = static_cast<int>((v >> j) & 1u);
                    if (hist[0].cell(idx) != bit) {
                        hist[0].set(idx, bit);
                        differs = true;
                    }
                }
                if (!differs)
                    continue;
                for (int t = 0; t < horizon; ++t)
                    step_into(hist[static_cast<size_t>(t)], hist[static_cast<size_t>(t) + 1]);

                bool single = true;
                for (int t = t1; t <= horizon; ++t) {
                    int s = tile.drift * t % kEtherSpatialPeriod;
                    if (!extract_single(hist[static_cast<size_t>(t)],
                                        backdrop[static_cast<size_t>(s)], s,
                                        tail[static_cast<size_t>(t - t1)])) {
                        single = false;
                        break;
                    }
                }
                if (!single)
                    continue;

                // minimal period of the (rho, bits) sequence with a
                // consistent per-period shift
                int period = 0;
                int disp = 0;
                for (int p = 1; p <= max_period && !period; ++p) {
                    bool ok = true;
                    int d0 = 0;
                    bool have_d = false;
                    for (int t = 0; t + p < tail_len; ++t) {
                        const TailStep& a = tail[static_cast<size_t>(t)];
                        const TailStep& b = tail[static_cast<size_t>(t + p)];
                        if (a.rho != b.rho || a.bits != b.bits) {
                            ok = false;
                            break;
                        }
                        int dd = norm_shift(b.start - a.start, n);
                        if (!have_d) {
                            d0 = dd;
                            have_d = true;
                        } else if (dd != d0) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok && have_d) {
                        period = p;
                        disp = d0;
                    }
                }
                if (!period || std::abs(disp) > period)
                    continue;

                GliderSpec g;
                g.period = period;
                g.displacement = disp;
                g.phases.reserve(static_cast<size_t>(period));
                for (int t = 0; t < period; ++t)
                    g.phases.push_back({tail[static_cast<size_t>(t)].rho,
                                        tail[static_cast<size_t>(t)].bits});

                // canonical rotation: lexicographically smallest encoding
                std::vector<GliderPhase> best = g.phases;
                std::string best_enc = cycle_encoding(best);
                for (int r = 1; r < period; ++r) {
                    std::vector<GliderPhase> rot(g.phases.begin() + r, g.phases.end());
                    rot.insert(rot.end(), g.phases.begin(), g.phases.begin() + r);
                    std::string enc = cycle_encoding(rot);
                    if (enc < best_enc) {
                        best_enc = enc;
                        best = std::move(rot);
                    }
                }
                g.phases = std::move(best);

                std::string key = std::to_string(period) + "/" + std::to_string(disp) + "|" +
                                  best_enc;
                found.try_emplace(std::move(key), std::move(g));
            }
        }
    }

    std::vector<GliderSpec> kept;
    for (auto& [key, g] : found)
        if (g.width() <= max_width)
            kept.push_back(std::move(g));
    std::sort(kept.begin(), kept.end(), order_before);

    Catalog cat;
    cat.max_width = max_width;
    cat.max_period = max_period;
    cat.seed_width = opts.seed_width;
    std::unordered_set<std::string> used;
    for (auto& g : kept) {
        if (!verify_glider(g))
            continue;
        bool clash = false;
        for (const auto& ph : g.phases)
            if (used.count(phase_key(ph))) {
                clash = true;
                break;
            }
        if (clash)
            continue;
        for (const auto& ph : g.phases)
            used.insert(phase_key(ph));
        char id[16];
        std::snprintf(id, sizeof id, "g%02d", static_cast<int>(cat.gliders.size()) + 1);
        g.id = id;
        cat.gliders.push_back(std::move(g));
    }
    cat.finalize();
    return cat;
}

bool verify_glider(const GliderSpec& g, int periods) {
    if (g.period <= 0 || periods < 1)
        return false;
    if (g.phases.size() != static_cast<size_t>(g.period))
        return false;
    if (std::abs(g.displacement) > g.period)
        return false;
    const EtherTile& tile = ether();
    if (mod14(g.displacement - tile.drift * g.period) != 0)
        return false;
    for (const auto& ph : g.phases) {
        if (ph.rho < 0 || ph.rho >= kEtherSpatialPeriod || ph.bits.empty())
            return false;
        for (char c : ph.bits)
            if (c != '0' && c != '1')
                return false;
    }

    const int total = g.period * periods;
    const int cells = g.width() + 2 * total + 2 * kEtherSpatialPeriod;
    const int n = kEtherSpatialPeriod * (cells / kEtherSpatialPeriod + 1);
    std::vector<Row> backdrop;
    backdrop.reserve(kEtherSpatialPeriod);
    for (int s = 0; s < kEtherSpatialPeriod; ++s)
        backdrop.push_back(ether_row(n, {s, 0}));

    Row r0 = backdrop[0];
    const int a0 = (n / 2 / kEtherSpatialPeriod) * kEtherSpatialPeriod + g.phases[0].rho;
    const std::string& b0 = g.phases[0].bits;
    for (size_t j = 0; j < b0.size(); ++j)
        r0.set(a0 + static_cast<int>(j), b0[j] == '1');

    Row cur = r0;
    Row next(n);
    TailStep step_seen;
    for (int t = 0; t <= total; ++t) {
        if (t % g.period == 0 &&
            cur != rotated(r0, static_cast<long long>(t / g.period) * g.displacement))
            return false;
        if (t < g.period) {
            int s = tile.drift * t % kEtherSpatialPeriod;
            if (!extract_single(cur, backdrop[static_cast<size_t>(s)], s, step_seen))
                return false;
            if (step_seen.rho != g.phases[static_cast<size_t>(t)].rho ||
                step_seen.bits != g.phases[static_cast<size_t>(t)].bits)
                return false;
        }
        if (t < total) {
            step_into(cur, next);
            std::swap(cur, next);
        }
    }
    return true;
}

std::string export_catalog(const Catalog& c) {
    const EtherTile& tile = ether();
    std::ostringstream os;
    os << "# r110-catalog v1\n";
    os << "# ether " << tile.tile_row().to_string() << " tau " << tile.temporal_period
       << " drift " << tile.drift << "\n";
    os << "# bounds width " << c.max_width << " period " << c.max_period << " seed-width "
       << c.seed_width << "\n";
    for (const auto& g : c.gliders) {
        os << "glider " << g.id << " period " << g.period << " displacement " << g.displacement
           << "\n";
        for (const auto& ph : g.phases)
            os << "phase " << ph.rho << " " << ph.bits << "\n";
        os << "end\n";
    }
    return os.str();
}

Catalog import_catalog(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto next_line = [&](bool allow_eof) -> bool {
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (!line.empty())
                return true;
        }
        if (!allow_eof)
            throw std::runtime_error("catalog text ended early");
        return false;
    };
    auto fail = [&](const std::string& why) -> void {
        throw std::runtime_error("bad catalog line \"" + line + "\": " + why);
    };

    if (!next_line(false) || line != "# r110-catalog v1")
        throw std::runtime_error("not a r110-catalog v1 file");

    const EtherTile& tile = ether();
    next_line(false);
    {
        std::istringstream ls(line);
        std::string hash, kw, cells, tau_kw, drift_kw;
        int tau = 0, drift = 0;
        if (!(ls >> hash >> kw >> cells >> tau_kw >> tau >> drift_kw >> drift) || hash != "#" ||
            kw != "ether" || tau_kw != "tau" || drift_kw != "drift")
            fail("expected ether header");
        if (cells != tile.tile_row().to_string() || tau != tile.temporal_period ||
            drift != tile.drift)
            fail("background does not match this build");
    }

    Catalog cat;
    next_line(false);
    {
        std::istringstream ls(line);
        std::string hash, kw, w_kw, p_kw, s_kw;
        if (!(ls >> hash >> kw >> w_kw >> cat.max_width >> p_kw >> cat.max_period >> s_kw >>
              cat.seed_width) ||
            hash != "#" || kw != "bounds" || w_kw != "width" || p_kw != "period" ||
            s_kw != "seed-width")
            fail("expected bounds header");
    }

    while (next_line(true)) {
        std::istringstream ls(line);
        std::string kw, p_kw, d_kw;
        GliderSpec g;
        if (!(ls >> kw >> g.id >> p_kw >> g.period >> d_kw >> g.displacement) ||
            kw != "glider" || p_kw != "period" || d_kw != "displacement")
            fail("expected glider header");
        for (int i = 0; i < g.period; ++i) {
            next_line(false);
            std::istringstream ps(line);
            GliderPhase ph;
            if (!(ps >> kw >> ph.rho >> ph.bits) || kw != "phase")
                fail("expected phase line");
            g.phases.push_back(std::move(ph));
        }
        next_line(false);
        if (line != "end")
            fail("expected end marker");
        if (cat.find(g.id))
            throw std::runtime_error("duplicate catalog id " + g.id);
        if (!verify_glider(g))
            throw std::runtime_error("catalog entry " + g.id + " failed verification");
        cat.gliders.push_back(std::move(g));
    }
    cat.finalize();
    return cat;
}

std::pair<int, int> placement_extent(const LatticeConfig& config, const Catalog& catalog,
                                     const Placement& p) {
    const GliderSpec* g = catalog.find(p.glider_id);
    if (!g)
        throw std::invalid_argument("unknown glider id " + p.glider_id);
    if (p.phase < 0 || p.phase >= g->period)
        throw std::invalid_argument("phase " + std::to_string(p.phase) + " out of range for " +
                                    p.glider_id);
    const GliderPhase& ph = g->phases[static_cast<size_t>(p.phase)];
    int a = p.position - mod14(p.position - ph.rho);
    a = ((a % config.width) + config.width) % config.width;
    return {a, static_cast<int>(ph.bits.size())};
}

Row splice(const LatticeConfig& config, const Catalog& catalog,
           const std::vector<Placement>& placements) {
    config.validate(catalog.v_max());
    Row row = ether_row(config.width);
    if (placements.empty())
        return row;

    struct Extent {
        int start;
        int width;
        const std::string* bits;
    };
    std::vector<Extent> ext;
    ext.reserve(placements.size());
    for (const auto& p : placements) {
        auto [a, w] = placement_extent(config, catalog, p);
        const GliderSpec* g = catalog.find(p.glider_id);
        ext.push_back({a, w, &g->phases[static_cast<size_t>(p.phase)].bits});
    }
    for (size_t i = 1; i < ext.size(); ++i)
        if (ext[i].start <= ext[i - 1].start)
            throw std::invalid_argument("placements must be ordered left to right");
    for (size_t i = 0; i < ext.size(); ++i) {
        const Extent& cur = ext[i];
        const Extent& nxt = ext[(i + 1) % ext.size()];
        int gap = (nxt.start - (cur.start + cur.width) % config.width + config.width) %
                  config.width;
        if (gap < kEtherSpatialPeriod)
            throw std::invalid_argument(
                "placements leave less than one ether period of background between blocks");
    }
    for (const auto& e : ext)
        for (int j = 0; j < e.width; ++j)
            row.set((e.start + j) % config.width, (*e.bits)[static_cast<size_t>(j)] == '1');
    return row;
}

bool will_collide(const Catalog& catalog, const Placement& left, const Placement& right,
                  const LatticeConfig& config) {
    const GliderSpec* gl = catalog.find(left.glider_id);
    const GliderSpec* gr = catalog.find(right.glider_id);
    if (!gl || !gr)
        throw std::invalid_argument("unknown glider id");
    auto [al, wl] = placement_extent(config, catalog, left);
    auto [ar, wr] = placement_extent(config, catalog, right);
    (void)wr;
    if (ar <= al)
        throw std::invalid_argument("placements must be ordered left to right");
    double vl = gl->velocity();
    double vr = gr->velocity();
    if (vl <= vr)
        return false;
    double gap = static_cast<double>(ar - (al + wl));
    if (gap < 0.0)
        gap = 0.0;
    return gap / (vl - vr) < static_cast<double>(config.steps);
}

}  // namespace r110
