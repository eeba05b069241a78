#pragma once

#include <string>
#include <vector>

#include "r110/catalog.hpp"
#include "r110/ether.hpp"
#include "r110/row.hpp"

namespace r110 {

/// One residual block of a decomposed row. Catalogued particles carry
/// their glider id and phase index; unrecognized blocks get a stable
/// "U:<hash>" label and phase -1.
struct Particle {
    std::string id;
    int position = 0;  // block start, lattice index
    int phase = -1;
    int width = 0;

    bool operator==(const Particle&) const = default;
};

struct Decomposition {
    EtherPhase phase;
    double coverage = 0.0;   // fraction of cells matching the tiling
    bool turbulent = false;  // coverage below 1/2; particles not meaningful
    std::vector<Particle> particles;  // left to right after the canonical cut

    std::vector<std::string> ids() const;
    /// No turbulence and every particle catalogued.
    bool clean() const;
};

/// All background tilings of a lattice width, laid out
/// [temporal_offset * 14 + spatial_offset]; one evolution's worth of
/// decompositions should share one set.
std::vector<Row> ether_backdrops(int width);

/// Best-coverage ether alignment (ties: smallest spatial, then temporal
/// offset), residual segments merged across gaps shorter than one tile,
/// particles ordered by cutting the ring after the longest ether run.
Decomposition decompose(const Row& r, const Catalog& catalog);
Decomposition decompose(const Row& r, const Catalog& catalog, const std::vector<Row>& backdrops);

}  // namespace r110
