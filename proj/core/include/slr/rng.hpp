#pragma once

#include <cstdint>
#include <vector>

namespace slr {

/// Counter-based pseudo-random generator (SplitMix64 stream).
///
/// The state is a plain counter advanced by a fixed odd increment; each
/// output is a bijective mix of the counter. Streams are keyed by
/// (seed, stream), so independent tasks (replications, splits) can each
/// derive their own generator and produce identical values regardless of
/// scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : state_(mix(mix(seed) ^ mix(stream ^ 0x6a09e667f3bcc909ULL))) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe to pass to log().
    double uniform01_open0() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal via Box-Muller (cosine branch).
    double normal() noexcept;

    /// Bernoulli draw with success probability p.
    int bernoulli(double p) noexcept { return uniform01() < p ? 1 : 0; }

    /// Unbiased-enough integer in [0, bound) via 128-bit multiply.
    std::uint64_t below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) noexcept {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace slr
