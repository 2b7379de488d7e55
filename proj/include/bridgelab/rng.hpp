#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace bridgelab {

// Deterministic RNG with explicit derivation of independent substreams.
// All randomness in the library flows through explicit Rng handles, so a run
// is reproducible from (seed, trial, role) paths alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Derive an independent stream from a seed and a path of indices,
    // e.g. derive(seed, {trial, role}).
    static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t x = mix(seed);
        for (std::uint64_t p : path) x = mix(x ^ mix(p + 0x9e3779b97f4a7c15ULL));
        return Rng(x);
    }

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n). Rejection sampling on raw 64-bit output; avoids the
    // implementation-defined stepping of std::uniform_int_distribution.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    int bit() { return static_cast<int>(next() & 1u); }

    // Uniform integer in [-bound, bound].
    std::int64_t signed_below(std::uint64_t bound) {
        return static_cast<std::int64_t>(below(2 * bound + 1)) - static_cast<std::int64_t>(bound);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
};

} // namespace bridgelab
