#include <rsatoy/sieve.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "oracles.hpp"

namespace rsatoy {
namespace {

std::vector<std::uint64_t> as_vector(const PrimeTable& table)
{
    return {table.begin(), table.end()};
}

TEST(Sieve, PrimesUpToThirty)
{
    const auto table = sieve_primes(30);
    EXPECT_EQ(table.limit(), 30U);
    EXPECT_EQ(as_vector(table), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Sieve, SmallestLimit)
{
    EXPECT_EQ(as_vector(sieve_primes(2)), (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(as_vector(sieve_primes(3)), (std::vector<std::uint64_t>{2, 3}));
}

TEST(Sieve, MatchesTrialDivisionForEveryLimitUpTo500)
{
    for (std::uint64_t limit = 2; limit <= 500; ++limit) {
        ASSERT_EQ(as_vector(sieve_primes(limit)), oracle::primes_by_division(limit)) << "limit " << limit;
    }
}

TEST(Sieve, PrimeCounts)
{
    EXPECT_EQ(sieve_primes(10'000).size(), 1229U);
    EXPECT_EQ(sieve_primes(100'000).size(), 9592U);
}

TEST(Sieve, DefaultTableHoldsFirstTenThousandPrimes)
{
    const auto table = sieve_primes(default_sieve_limit);
    ASSERT_EQ(table.size(), 10000U);
    EXPECT_EQ(table[0], 2U);
    EXPECT_EQ(table[9999], 104729U);
    EXPECT_EQ(as_vector(table), oracle::primes_by_division(default_sieve_limit));
    EXPECT_TRUE(std::is_sorted(table.begin(), table.end()));
    EXPECT_EQ(std::adjacent_find(table.begin(), table.end()), table.end());
}

TEST(Sieve, RejectsBadLimits)
{
    EXPECT_THROW(sieve_primes(0), domain_error);
    EXPECT_THROW(sieve_primes(1), domain_error);
    EXPECT_THROW(sieve_primes(max_sieve_limit + 1), resource_error);
}

TEST(NthPrime, IndexesFromZero)
{
    const auto small = sieve_primes(30);
    EXPECT_EQ(nth_prime(small, 0), 2U);
    EXPECT_EQ(nth_prime(small, 4), 11U);
    EXPECT_THROW(nth_prime(small, 10), std::out_of_range);

    const auto big = sieve_primes(default_sieve_limit);
    EXPECT_EQ(nth_prime(big, 999), 7919U);
    EXPECT_EQ(nth_prime(big, 1000), 7927U);
    EXPECT_EQ(nth_prime(big, 9999), 104729U);
    EXPECT_THROW(nth_prime(big, 10000), std::out_of_range);
}

} // namespace
} // namespace rsatoy
