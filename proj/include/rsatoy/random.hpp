#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "errors.hpp"

namespace rsatoy {

/// Seedable generator threaded explicitly through every probabilistic call.
///
/// Draws are produced by std::mt19937_64, whose output sequence is fixed by
/// the standard. Range reduction is done here rather than through
/// std::uniform_int_distribution (implementation-defined), so a given seed
/// produces the same samples on every standard library.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi], unbiased.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        if (lo > hi) {
            throw domain_error("empty sampling range");
        }
        const std::uint64_t span = hi - lo;
        if (span == std::numeric_limits<std::uint64_t>::max()) {
            return next();
        }
        const std::uint64_t range = span + 1;
        // Reject the top partial bucket of the 64-bit output space.
        const std::uint64_t cutoff = std::numeric_limits<std::uint64_t>::max() -
                                     std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t draw = next();
        while (draw >= cutoff) {
            draw = next();
        }
        return lo + draw % range;
    }

    /// Independent child generator; advances this one by a single draw.
    RngState split()
    {
        // splitmix64 finalizer decorrelates the child seed from the parent stream.
        std::uint64_t z = next() + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return RngState(z ^ (z >> 31));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace rsatoy
