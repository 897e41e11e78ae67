#pragma once

#include <cstdint>

namespace chipkit {

/// SplitMix64 (Steele, Lea and Flood). The only randomness source in the
/// library: every generator and suite draws from an instance seeded by an
/// explicit 64-bit value, so runs are bit-reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) :
        _state(seed)
    {
    }

    auto next() -> std::uint64_t;

    /// Independent stream derived from the next output.
    auto split() -> SplitMix64 { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

    /// Uniform integer in [0, bound); bound must be positive.
    auto below(std::uint64_t bound) -> std::uint64_t;

    /// Uniform integer in [lo, hi].
    auto between(long long lo, long long hi) -> long long;

    /// Uniform double in [0, 1) with 53 random bits.
    auto unit() -> double;

    auto bernoulli(double p) -> bool { return unit() < p; }

    auto state() const -> std::uint64_t { return _state; }

private:
    std::uint64_t _state;
};

}
