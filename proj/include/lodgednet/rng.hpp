#pragma once

#include <cstdint>
#include <random>

namespace lodgednet {

// Seeded random generator used everywhere randomness is needed.
//
// All draws go through next_u64() of a mt19937_64 engine; floating-point
// values are built from the raw bits directly instead of the standard
// distributions, whose output is not pinned by the standard. This keeps
// every result bit-reproducible for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : seed_(seed), engine_(scramble(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    // Uniform integer in [lo, hi] (inclusive). Modulo bias is negligible
    // for the small ranges used here.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    bool bernoulli(double p) { return next_double() < p; }

    std::uint64_t seed() const { return seed_; }

    // Independent stream derived from (seed, stream id). Deriving the same
    // id twice yields the same stream, so per-sample/per-epoch streams do
    // not depend on processing order.
    Rng derive(std::uint64_t stream) const {
        std::uint64_t x = seed_ ^ (0x9E3779B97F4A7C15ull * (stream + 1));
        return Rng(scramble(x));
    }

private:
    // splitmix64 finalizer; decorrelates nearby seeds.
    static std::uint64_t scramble(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace lodgednet
