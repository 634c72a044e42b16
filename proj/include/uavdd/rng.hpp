#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace uavdd {

/// xoshiro256** seeded through splitmix64. Self-contained so that streams are
/// reproducible byte-for-byte across platforms and standard libraries
/// (std:: distributions are implementation-defined and cannot be relied on
/// for cross-build determinism).
class Rng {
public:
    explicit Rng(std::uint64_t seed) { reseed(seed); }

    /// Independent substream for one Monte-Carlo trial. Trials seeded this
    /// way can run on any thread in any order with identical results.
    static Rng substream(std::uint64_t seed, std::uint64_t stream_index) {
        return Rng(splitmix(seed) ^ splitmix(0x9E3779B97F4A7C15ULL * (stream_index + 1)));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Exponential with unit rate.
    double exponential() { return -std::log1p(-uniform()); }

    /// Exact Poisson count via cumulated unit-exponential gaps; stable for
    /// the means used here (up to a few thousand).
    std::uint64_t poisson(double mean) {
        if (!(mean >= 0.0)) throw std::invalid_argument("poisson: negative mean");
        if (mean == 0.0) return 0;
        std::uint64_t n = 0;
        double acc = exponential();
        while (acc <= mean) {
            ++n;
            acc += exponential();
        }
        return n;
    }

    /// Gamma(shape=m, scale=1/m) for integer m: normalized Nakagami-m power gain.
    double gamma_unit_mean(int m) {
        if (m < 1) throw std::invalid_argument("gamma_unit_mean: shape must be >= 1");
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += exponential();
        return s / static_cast<double>(m);
    }

private:
    void reseed(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) {
            s += 0x9E3779B97F4A7C15ULL;
            w = mix(s);
        }
        // Avoid the all-zero state.
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        return mix(x);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4] = {};
};

}  // namespace uavdd
