#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace corewalk {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// SplitMix64 finalizer, used to derive independent stream seeds.
inline u64 mix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// One generator per run: stream k of a base seed is mt19937_64 seeded from
// mixed (seed, k) words. Streams are reproducible and independent of the
// number of worker threads.
inline std::mt19937_64 derive_stream(u64 seed, u64 stream) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(mix64(seed) >> 32),
        static_cast<std::uint32_t>(mix64(seed)),
        static_cast<std::uint32_t>(mix64(seed ^ mix64(stream)) >> 32),
        static_cast<std::uint32_t>(mix64(seed ^ mix64(stream))),
        static_cast<std::uint32_t>(mix64(stream + 0x632be59bd9b4e019ULL) >> 32),
        static_cast<std::uint32_t>(mix64(stream + 0x632be59bd9b4e019ULL))};
    return std::mt19937_64(seq);
}

// Unbiased draw in [0, bound). std::uniform_int_distribution is not pinned
// down by the standard, so results would differ across standard libraries;
// this rejection sampler is portable.
inline u64 uniform_below(std::mt19937_64& rng, u64 bound) {
    u64 threshold = (0 - bound) % bound;
    for (;;) {
        u64 r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline u128 uniform_below_128(std::mt19937_64& rng, u128 bound) {
    if (bound <= static_cast<u128>(~static_cast<u64>(0)))
        return uniform_below(rng, static_cast<u64>(bound));
    u128 threshold = (-bound) % bound;
    for (;;) {
        u128 r = (static_cast<u128>(rng()) << 64) | rng();
        if (r >= threshold) return r % bound;
    }
}

inline u128 pow2_ceil_128(u128 x) {
    u128 p = 1;
    while (p < x) p <<= 1;
    return p;
}

inline std::string u128_to_string(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    return s;
}

}  // namespace corewalk
