#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qsc {

// Deterministic 64-bit seed derivation. Tasks derive their own generator
// seed from (master seed, label, grid indices) so results do not depend on
// scheduling order or worker count.

inline std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t v) {
    return mix64(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

inline std::uint64_t seed_combine(std::uint64_t seed, std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return seed_combine(seed, h);
}

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, Rest... idx) {
    std::uint64_t s = seed_combine(master, label);
    ((s = seed_combine(s, static_cast<std::uint64_t>(idx))), ...);
    return s;
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace qsc
