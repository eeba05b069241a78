#pragma once

#include <string>

#include "r110/engine.hpp"

namespace r110 {

enum class RenderFormat { PBM, ASCII };

/// Plain PBM (magic P1): "P1\n<width> <rows>\n" then one '0'/'1' text
/// line per lattice row, time increasing downward, 1 = black.
std::string render_pbm(const SpacetimeDiagram& d);

/// Unicode text art: '█' for 1, '·' for 0. With a highlight mask of the
/// same dimensions, masked cells render as 'X' (cell 1) / 'x' (cell 0).
std::string render_ascii(const SpacetimeDiagram& d, const SpacetimeDiagram* highlight = nullptr);

}  // namespace r110
