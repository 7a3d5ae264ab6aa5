#pragma once

#include <cmath>
#include <cstdint>

#include "hybridtrap/constants.hpp"

// Deterministic random numbers for reproducible ensembles.
//
// Generator: xoshiro256** seeded through SplitMix64. Per-trajectory streams
// are derived from (master seed, stream index), so an ensemble gives
// bit-identical results for any worker count and any execution order.

namespace hybridtrap {

inline constexpr const char* kRngAlgorithm = "splitmix64+xoshiro256**";

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
public:
    // Stream `index` of master `seed`; distinct indices give independent
    // streams (seeds scrambled through SplitMix64 before state fill).
    explicit Rng(std::uint64_t seed, std::uint64_t stream_index = 0) {
        std::uint64_t mix = seed;
        (void)splitmix64(mix);
        mix ^= 0x6a09e667f3bcc909ull * (stream_index + 1);
        for (auto& word : state_) word = splitmix64(mix);
        have_cached_normal_ = false;
        cached_normal_ = 0.0;
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

    // Uniform in (0,1); never returns 0 so log() below is safe.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (explicit formula, so the stream of
    // draws is identical on every compiler).
    double normal() {
        if (have_cached_normal_) {
            have_cached_normal_ = false;
            return cached_normal_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = constants::two_pi * u2;
        cached_normal_ = radius * std::sin(angle);
        have_cached_normal_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double cached_normal_;
    bool have_cached_normal_;
};

}
