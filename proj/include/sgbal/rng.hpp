#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sgbal::rng {

// All randomness in the library flows through std::mt19937_64 seeded
// explicitly by the caller.  The helpers below avoid std::*_distribution so
// that a given seed produces the same stream on every standard library.
using Engine = std::mt19937_64;

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t bounded(Engine& eng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = eng();
    } while (r >= limit);
    return r % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double unit(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle driven by bounded().
template <class T>
void shuffle(std::vector<T>& v, Engine& eng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded(eng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Derive an independent engine for stream `stream` of a master seed
// (splitmix64 finalising steps decorrelate nearby inputs).
inline Engine sub_engine(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return Engine(z);
}

} // namespace sgbal::rng
