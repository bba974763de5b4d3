#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace catk::detail {

// Shortest exact decimal form; used everywhere a trace or report is
// serialized so that identical runs produce identical bytes.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Round to 15 significant digits (machine-report convention).
inline double round_sig15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

} // namespace catk::detail
