/*
 * Copyright (c) 2026 the lpwansim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPWAN_RNG_HPP_
#define LPWAN_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace lpwan {

/// SplitMix64 finalizer step. Used both as a standalone counter-based
/// generator (one output per key) and to expand seeds for Xoshiro streams.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Mixes a tuple of keys into one 64-bit value. Order-sensitive.
inline constexpr std::uint64_t mix_keys(std::initializer_list<std::uint64_t> keys) noexcept
{
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t k : keys) {
        h = splitmix64(h ^ k);
    }
    return h;
}

/// Converts a raw 64-bit word to a uniform double in [0, 1) with 53-bit
/// resolution.
inline double u64_to_unit_double(std::uint64_t x) noexcept
{
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// xoshiro256++ stream. Small, fast, and seedable from a single 64-bit key,
/// so every node and subsystem gets an independent stream whose draws do not
/// depend on what any other stream consumed.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) noexcept
    {
        std::uint64_t sm = seed;
        for (auto &word : state_) {
            sm = splitmix64(sm);
            word = sm;
        }
    }

    std::uint64_t next_u64() noexcept
    {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() noexcept { return u64_to_unit_double(next_u64()); }

    /// Exponential with the given mean.
    double exponential(double mean) noexcept { return -std::log1p(-uniform()) * mean; }

    /// Uniform integer in [0, bound). bound must be >= 1.
    std::uint32_t uniform_int(std::uint32_t bound) noexcept
    {
        // Lemire's multiply-shift with rejection of the biased zone.
        std::uint64_t x = next_u64() >> 32;
        std::uint64_t m = x * bound;
        auto lo = static_cast<std::uint32_t>(m);
        if (lo < bound) {
            const std::uint32_t threshold = (0u - bound) % bound;
            while (lo < threshold) {
                x = next_u64() >> 32;
                m = x * bound;
                lo = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t v, int k) noexcept
    {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4]{};
};

/// One-shot keyed draws. Deterministic in the key alone, so a value tied to
/// an entity pair (say a transmission and the node sensing it) is identical
/// no matter when or how often it is evaluated.
inline double keyed_uniform(std::uint64_t key) noexcept
{
    return u64_to_unit_double(splitmix64(key));
}

/// Unit-mean exponential draw from a key.
inline double keyed_exp1(std::uint64_t key) noexcept
{
    return -std::log1p(-keyed_uniform(key));
}

/// Stream tags keeping the hierarchical split of randomness: deployment,
/// per-node traffic, per-node MAC decisions, and per-transmission fading are
/// all decoupled, so reconfiguring one population never perturbs another.
namespace stream_tag {
inline constexpr std::uint64_t deployment = 0xD1;
inline constexpr std::uint64_t traffic = 0xD2;
inline constexpr std::uint64_t mac = 0xD3;
inline constexpr std::uint64_t fading = 0xD4;
} // namespace stream_tag

} // namespace lpwan

#endif // LPWAN_RNG_HPP_
