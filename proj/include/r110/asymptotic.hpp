#pragma once

#include <string>
#include <vector>

#include "r110/catalog.hpp"
#include "r110/decompose.hpp"
#include "r110/engine.hpp"

namespace r110 {

/// Canonical late-time glider content: the ordered id list once the
/// decomposition stops changing, or the distinguished unsettled value.
/// Positions and phases are deliberately absent.
struct AsymptoticState {
    bool settled = false;
    std::vector<std::string> ids;

    /// "UNSETTLED", "ether" for a settled empty state, else ids joined with '+'.
    std::string fingerprint() const;

    bool operator==(const AsymptoticState&) const = default;
};

AsymptoticState parse_fingerprint(const std::string& text);

/// Settled iff the last `settle_window` rows all decompose cleanly to
/// one identical ordered id list. Requires settle_window >= 2 * the
/// largest catalogued period and a diagram at least that long.
AsymptoticState asymptotic_state(const SpacetimeDiagram& d, const Catalog& catalog,
                                 int settle_window);

}  // namespace r110
