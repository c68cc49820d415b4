#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace tempus {

// Shortest representation that round-trips through a double.
inline std::string format_roundtrip(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

// 12 significant digits, the CLI's human-facing precision.
inline std::string format_sig12(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace tempus
