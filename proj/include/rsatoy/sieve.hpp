#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace rsatoy {

/// Sieve bound that yields exactly the first 10,000 primes (the last is 104,729).
inline constexpr std::uint64_t default_sieve_limit = 104'730;

inline constexpr std::uint64_t max_sieve_limit = 100'000'000;

/// Every prime in [2, limit], ascending. Immutable once built.
class PrimeTable {
public:
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    std::uint64_t limit() const noexcept { return limit_; }
    std::size_t size() const noexcept { return primes_.size(); }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }

    std::uint64_t operator[](std::size_t index) const { return primes_[index]; }

    auto begin() const noexcept { return primes_.begin(); }
    auto end() const noexcept { return primes_.end(); }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

/// Sieve of Eratosthenes over [2, limit]; crossing off starts at p*p.
inline PrimeTable sieve_primes(std::uint64_t limit)
{
    if (limit < 2) {
        throw domain_error("sieve limit must be at least 2");
    }
    if (limit > max_sieve_limit) {
        throw resource_error("sieve limit " + std::to_string(limit) + " exceeds " +
                             std::to_string(max_sieve_limit));
    }

    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) {
            continue;
        }
        primes.push_back(p);
        for (std::uint64_t multiple = p * p; multiple <= limit; multiple += p) {
            composite[multiple] = true;
        }
    }
    return PrimeTable(limit, std::move(primes));
}

/// Zero-based lookup: nth_prime(t, 0) == 2.
inline std::uint64_t nth_prime(const PrimeTable& table, std::uint32_t index)
{
    if (index >= table.size()) {
        throw std::out_of_range("prime index " + std::to_string(index) + " out of range (table has " +
                                std::to_string(table.size()) + " primes)");
    }
    return table[index];
}

} // namespace rsatoy
