#pragma once

#include <cstdint>
#include <random>

namespace qtopo {

// splitmix64 finalizer; decorrelates raw seeds and derives substreams
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

// Independent substream for sample `index` under a master seed. Sampling
// code assigns one substream per sample so results do not depend on the
// order in which workers pick up samples.
inline std::mt19937_64 substream(std::uint64_t master_seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(master_seed ^ splitmix64(index + 1)));
}

// Uniform in [0,1). mt19937_64 output is standardized, so this is
// reproducible across platforms (std::uniform_real_distribution is not).
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

// Unbiased integer in [0, n), n > 0.
inline std::uint64_t uniform_index(std::mt19937_64& eng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % n;
}

}  // namespace qtopo
