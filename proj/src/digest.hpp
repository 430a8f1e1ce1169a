#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace igusa {

// FNV-1a 64-bit content hash, hex-encoded; used for provenance fields only.
inline std::string digest64_hex(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* hexd = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hexd[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

}  // namespace igusa
