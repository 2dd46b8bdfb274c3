#include "vkcgs/rng.hpp"

#include <stdexcept>

namespace vkcgs {

std::uint64_t splitmix64(std::uint64_t x) {
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    const std::uint64_t out = splitmix64(state_);
    state_ += 0x9E3779B97F4A7C15ULL;
    return out;
}

std::uint64_t SplitMix64::nextBelow(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("nextBelow(0)");
    }
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) {
            return r % n;
        }
    }
}

std::int64_t SplitMix64::nextInRange(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("empty range");
    }
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {  // full 64-bit range
        return static_cast<std::int64_t>(next());
    }
    return lo + static_cast<std::int64_t>(nextBelow(span));
}

BigInt SplitMix64::nextBigIntInRange(const BigInt& lo, const BigInt& hi) {
    if (lo > hi) {
        throw std::invalid_argument("empty range");
    }
    const BigInt span = hi - lo + 1;
    if (span == 1) {
        return lo;
    }
    const unsigned bits = static_cast<unsigned>(msb(span - 1)) + 1;
    for (;;) {
        BigInt v = 0;
        unsigned got = 0;
        while (got < bits) {
            const unsigned take = bits - got >= 64 ? 64 : bits - got;
            std::uint64_t w = next();
            if (take < 64) {
                w &= (1ULL << take) - 1;
            }
            v <<= take;
            v |= w;
            got += take;
        }
        if (v < span) {
            return lo + v;
        }
    }
}

std::uint64_t deriveTrialSeed(std::uint64_t masterSeed, std::uint64_t trialIndex) {
    return splitmix64(masterSeed ^ trialIndex);
}

}  // namespace vkcgs
