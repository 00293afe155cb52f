#pragma once

#include <cstdint>
#include <string>

namespace qhv {

/// Fixed 64-bit linear congruential generator, specified bit-exactly so that
/// reports are reproducible across platforms and languages:
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///   output = high 32 bits of the new state
struct Prng {
    std::uint64_t state = 0;

    explicit Prng(std::uint64_t seed = 0) : state(seed) {}

    std::uint32_t next_u32() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 32);
    }

    /// Uniform in [0, n), n >= 1, by rejection on the last partial block.
    std::uint32_t next_below(std::uint32_t n) {
        const std::uint32_t limit = UINT32_MAX - UINT32_MAX % n;
        std::uint32_t v;
        do {
            v = next_u32();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

    bool next_bool() { return (next_u32() & 1u) != 0; }
};

/// splitmix64 finalizer; used only for deterministic seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// FNV-1a 64-bit hash of a string; used to mix identity ids into cell seeds.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

/// Deterministic per-cell generator for the work unit (seed, id, n, ell).
/// Cells own independent streams, so evaluation order (or concurrency) never
/// perturbs which points a cell sees.
inline Prng fork_prng(std::uint64_t seed, const std::string& id, int n, int ell) {
    std::uint64_t s = splitmix64(seed ^ fnv1a64(id));
    s = splitmix64(s ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)));
    s = splitmix64(s ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(ell)));
    return Prng(s);
}

} // namespace qhv
