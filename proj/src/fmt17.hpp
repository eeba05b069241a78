#pragma once

#include <cstdio>
#include <string>

namespace r110::detail {

/// Shortest-faithful decimal form used by every CSV writer: 17
/// significant digits round-trip any double exactly.
inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace r110::detail
