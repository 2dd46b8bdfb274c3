#pragma once

#include <cstdint>

#include "vkcgs/rational.hpp"

namespace vkcgs {

/// SplitMix64 (Steele, Lea, Flood). Pinned by algorithm so that sampled
/// configurations and derived seeds reproduce bit-for-bit across platforms
/// and language bindings.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, n), unbiased via rejection. n >= 1.
    std::uint64_t nextBelow(std::uint64_t n);

    /// Uniform in [lo, hi], inclusive.
    std::int64_t nextInRange(std::int64_t lo, std::int64_t hi);

    /// Uniform in [lo, hi] for arbitrary-precision bounds, unbiased.
    BigInt nextBigIntInRange(const BigInt& lo, const BigInt& hi);

  private:
    std::uint64_t state_;
};

/// One stateless output step of SplitMix64 applied to x.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-trial seed: SplitMix64(masterSeed XOR trialIndex). Independent of
/// scheduling, so concurrent runs reproduce the sequential report.
std::uint64_t deriveTrialSeed(std::uint64_t masterSeed, std::uint64_t trialIndex);

}  // namespace vkcgs
