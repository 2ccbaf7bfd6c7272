#pragma once

#include <cstdio>
#include <string>

namespace squeeze {

/// 17-significant-digit rendering, enough to round-trip any double exactly.
inline std::string format_double17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace squeeze
