#ifndef A4LINK_IO_HPP
#define A4LINK_IO_HPP

#include <json.hpp>

#include <cstdio>
#include <string>

namespace a4link {

// Insertion-ordered JSON so every report is byte-deterministic.
using Json = nlohmann::ordered_json;

/// Fixed 17-significant-digit decimal; the format every emitted float uses.
inline std::string fmt17(double v) {
    if (v == 0) v = 0; // collapse negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace a4link

#endif
