#pragma once

#include <cstdint>
#include <random>

namespace utc {

// splitmix64 finalizer. Bijective on u64, so distinct inputs give distinct outputs.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// mt19937_64 with hand-rolled draw helpers. std::uniform_* distributions are
// implementation-defined, so we avoid them to keep runs reproducible.
class Rng {
public:
    Rng() : engine_(0) {}
    explicit Rng(uint64_t seed) : engine_(seed) {}

    void seed(uint64_t s) { engine_.seed(s); }

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n must be > 0.
    int uniform_int(int n) { return static_cast<int>(uniform01() * static_cast<double>(n)); }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace utc
