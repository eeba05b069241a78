#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "r110/engine.hpp"
#include "r110/ether.hpp"
#include "r110/row.hpp"

namespace r110 {

/// One step of a glider's cycle: the residual block that replaces the
/// background, described relative to the tiling. `rho` is the block's
/// start offset modulo 14 against the row's ether alignment; `bits` is
/// the raw cell content from first to last mismatching cell (interior
/// cells may coincide with the background).
struct GliderPhase {
    int rho = 0;
    std::string bits;

    bool operator==(const GliderPhase&) const = default;
};

/// A catalogued dislocation: a bounded residual that recurs, shifted by
/// `displacement`, every `period` steps when embedded in the background.
struct GliderSpec {
    std::string id;
    int period = 0;        // P, steps
    int displacement = 0;  // d, signed cells per period
    std::vector<GliderPhase> phases;  // size P, consecutive steps

    double velocity() const { return static_cast<double>(displacement) / period; }
    int width() const;  // widest phase block
};

struct CatalogSearchOptions {
    int seed_width = 12;   // widest seed block enumerated
    int horizon = 240;     // evolution steps per seed
    int ring_periods = 37; // search lattice width in ether periods
};

struct Catalog {
    int max_width = 0;
    int max_period = 0;
    int seed_width = 0;
    std::vector<GliderSpec> gliders;

    double v_max() const;
    const GliderSpec* find(const std::string& id) const;
    int index_of(const std::string& id) const;  // -1 when absent

    /// "<rho>:<bits>" -> (glider index, phase index); built by finalize().
    const std::unordered_map<std::string, std::pair<int, int>>& phase_lookup() const {
        return phase_lookup_;
    }

    /// Rebuild the phase lookup; called after construction or import.
    void finalize();

private:
    std::unordered_map<std::string, std::pair<int, int>> phase_lookup_;
};

/// Exhaustive seed search: every block of width <= seed_width is spliced
/// into the background at every relative offset, evolved, and kept when
/// the late-time residual is a single block recurring with period
/// <= max_period and width <= max_width. Entries are deduplicated by
/// their canonical phase cycle, re-verified by direct evolution, and
/// given ids in (velocity, period, width) order.
Catalog derive_catalog(int max_width, int max_period, const CatalogSearchOptions& opts = {});

/// Splice-and-evolve check of the periodicity invariant.
bool verify_glider(const GliderSpec& g, int periods = 10);

std::string export_catalog(const Catalog& c);
Catalog import_catalog(const std::string& text);

/// A glider instance for initial-condition construction. `position` is
/// snapped down to the nearest admissible start for the chosen phase.
struct Placement {
    std::string glider_id;
    int position = 0;
    int phase = 0;

    bool operator==(const Placement&) const = default;
};

/// Background row with the placed gliders' residual blocks written in.
/// Placements must be ordered left to right and separated by at least
/// one full ether period of clean background, or an exception is thrown.
Row splice(const LatticeConfig& config, const Catalog& catalog,
           const std::vector<Placement>& placements);

/// Snapped start index and block width a placement will occupy.
std::pair<int, int> placement_extent(const LatticeConfig& config, const Catalog& catalog,
                                     const Placement& p);

/// Kinematic collision test: true iff the left glider is faster and the
/// projected meeting time falls inside the evolution window.
bool will_collide(const Catalog& catalog, const Placement& left, const Placement& right,
                  const LatticeConfig& config);

}  // namespace r110
