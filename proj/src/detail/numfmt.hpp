#pragma once

#include <charconv>
#include <string>

namespace elasto::detail {

// Shortest round-trip representation, independent of the global locale.
inline std::string num(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace elasto::detail
