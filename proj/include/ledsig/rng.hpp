#ifndef LEDSIG_RNG_HPP
#define LEDSIG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace ledsig {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic random source. The engine is the standardized
/// mt19937_64, and every variate is derived by hand (not via the std
/// distribution templates, whose output is implementation-defined), so
/// identical seeds give identical streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : seed_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Independent child stream; depends only on (seed, tag), not on how
    // much of this stream was consumed.
    Rng derive(std::uint64_t tag) const {
        return Rng(splitmix64(seed_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1))));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n must be >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r < limit)
                return r % n;
        }
    }

    // Standard normal via Box-Muller.
    double normal() {
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Exponential with the given rate (mean 1/rate).
    double exponential(double rate) {
        return -std::log(1.0 - uniform01()) / rate;
    }

    // Poisson count by Knuth's product method; large means are split into
    // chunks (sums of independent Poissons are Poisson).
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 30.0) {
            total += poisson_small(30.0);
            mean -= 30.0;
        }
        if (mean > 0.0)
            total += poisson_small(mean);
        return total;
    }

private:
    std::uint64_t poisson_small(double mean) {
        const double threshold = std::exp(-mean);
        std::uint64_t count = 0;
        double product = uniform01();
        while (product > threshold) {
            count += 1;
            product *= uniform01();
        }
        return count;
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace ledsig

#endif
