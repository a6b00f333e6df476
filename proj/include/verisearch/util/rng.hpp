#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace verisearch::util {

// splitmix64 finalizer; bijective on u64.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(mix64(a) ^ b); }

inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) {
    return mix64(mix64(a, b) ^ c);
}

// FNV-1a; stable across platforms, unlike std::hash<std::string>.
inline uint64_t hash_text(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Uniform double in [0, 1) from the high 53 bits.
inline double to_unit(uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Portable uniform pick in [0, n); avoids distribution differences across stdlibs.
inline uint64_t pick_index(uint64_t state, uint64_t n) {
    return n == 0 ? 0 : mix64(state) % n;
}

}  // namespace verisearch::util
