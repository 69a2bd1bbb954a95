#pragma once

#include <charconv>
#include <string>

namespace heavytail {

// Shortest round-trip decimal representation; keeps CSV/JSON reports
// byte-stable across runs.
inline std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace heavytail
