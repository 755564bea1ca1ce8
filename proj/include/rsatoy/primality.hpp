#pragma once

/**
 * @file primality.hpp
 * @brief Fermat and Miller-Rabin probable-prime tests plus a trial-division
 *        reference.
 *
 * The probabilistic tests draw their bases from an explicit RngState, so a
 * verdict is a deterministic function of (n, iterations, seed). A Composite
 * verdict is always definite and names the base that proved it; a
 * ProbablyPrime verdict can be wrong, with probability at most 4^-k after k
 * Miller-Rabin rounds.
 *
 * Inputs 2, 3 and 4 are classified directly because the base range
 * [2, n-2] is empty or trivial for them.
 */

#include <cstdint>
#include <optional>

#include "errors.hpp"
#include "modarith.hpp"
#include "random.hpp"

namespace rsatoy {

inline constexpr std::uint32_t default_fermat_iterations = 5;
inline constexpr std::uint32_t default_miller_rabin_iterations = 20;

/// Largest input accepted by trial_division.
inline constexpr std::uint64_t trial_division_limit = 1'000'000'000'000ULL;

struct Verdict {
    enum class Kind { Composite, ProbablyPrime };

    Kind kind;
    /// Rounds survived; meaningful for ProbablyPrime only.
    std::uint32_t iterations_passed = 0;
    /// Base (or divisor, for trial division) that proves compositeness.
    std::optional<std::uint64_t> witness;

    static constexpr Verdict composite(std::optional<std::uint64_t> witness = std::nullopt)
    {
        return {Kind::Composite, 0, witness};
    }
    static constexpr Verdict probably_prime(std::uint32_t iterations)
    {
        return {Kind::ProbablyPrime, iterations, std::nullopt};
    }

    bool is_composite() const noexcept { return kind == Kind::Composite; }
    bool is_probably_prime() const noexcept { return kind == Kind::ProbablyPrime; }
};

/// n - 1 = 2^s * t with t odd.
struct MrDecomposition {
    std::uint32_t s;
    std::uint64_t t;

    friend constexpr bool operator==(const MrDecomposition&, const MrDecomposition&) = default;
};

constexpr MrDecomposition decompose(std::uint64_t n)
{
    if (n < 3 || n % 2 == 0) {
        throw domain_error("decompose requires an odd n >= 3");
    }
    MrDecomposition out{0, n - 1};
    while (out.t % 2 == 0) {
        out.t /= 2;
        ++out.s;
    }
    return out;
}

/// a^(n-1) == 1 (mod n).
constexpr bool fermat_passes_base(std::uint64_t n, std::uint64_t a)
{
    return modexp(a, n - 1, n) == 1;
}

/// True when base a proves the odd number n >= 5 composite: a^t != 1 and
/// a^(t*2^r) != n-1 for every 0 <= r < s.
constexpr bool is_miller_rabin_witness(std::uint64_t n, std::uint64_t a)
{
    const auto [s, t] = decompose(n);
    std::uint64_t x = modexp(a, t, n);
    if (x == 1 || x == n - 1) {
        return false;
    }
    for (std::uint32_t r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return false;
        }
        if (x == 1) {
            // Nontrivial square root of 1 reached.
            return true;
        }
    }
    return true;
}

namespace detail {

inline void require_iterations(std::uint32_t iterations)
{
    if (iterations == 0) {
        throw domain_error("iteration count must be at least 1");
    }
}

inline void require_testable(std::uint64_t n)
{
    if (n < 2) {
        throw domain_error("primality is undefined below 2");
    }
}

// Direct answers for n in {2, 3, 4}, where no base in [2, n-2] is useful.
inline std::optional<Verdict> classify_tiny(std::uint64_t n, std::uint32_t iterations)
{
    if (n == 2 || n == 3) {
        return Verdict::probably_prime(iterations);
    }
    if (n == 4) {
        return Verdict::composite(2);
    }
    return std::nullopt;
}

} // namespace detail

inline Verdict fermat_test(std::uint64_t n, std::uint32_t iterations, RngState& rng)
{
    detail::require_testable(n);
    detail::require_iterations(iterations);
    if (auto tiny = detail::classify_tiny(n, iterations)) {
        return *tiny;
    }
    for (std::uint32_t i = 0; i < iterations; ++i) {
        const std::uint64_t a = rng.uniform(2, n - 2);
        if (!fermat_passes_base(n, a)) {
            return Verdict::composite(a);
        }
    }
    return Verdict::probably_prime(iterations);
}

inline Verdict miller_rabin(std::uint64_t n, std::uint32_t iterations, RngState& rng)
{
    detail::require_testable(n);
    detail::require_iterations(iterations);
    if (auto tiny = detail::classify_tiny(n, iterations)) {
        return *tiny;
    }
    if (n % 2 == 0) {
        return Verdict::composite(2);
    }
    for (std::uint32_t i = 0; i < iterations; ++i) {
        const std::uint64_t a = rng.uniform(2, n - 2);
        if (is_miller_rabin_witness(n, a)) {
            return Verdict::composite(a);
        }
    }
    return Verdict::probably_prime(iterations);
}

/// Base-2 Fermat screen, then random-base Fermat rounds, then Miller-Rabin.
/// The first Composite short-circuits.
inline Verdict is_probable_prime(std::uint64_t n, std::uint32_t fermat_iters, std::uint32_t mr_iters,
                                 RngState& rng)
{
    detail::require_testable(n);
    detail::require_iterations(fermat_iters);
    detail::require_iterations(mr_iters);
    if (auto tiny = detail::classify_tiny(n, mr_iters)) {
        return *tiny;
    }
    if (!fermat_passes_base(n, 2)) {
        return Verdict::composite(2);
    }
    if (auto fermat = fermat_test(n, fermat_iters, rng); fermat.is_composite()) {
        return fermat;
    }
    return miller_rabin(n, mr_iters, rng);
}

/// Definite answer by dividing by every candidate up to sqrt(n).
constexpr Verdict trial_division(std::uint64_t n)
{
    if (n < 2 || n > trial_division_limit) {
        throw domain_error("trial division requires 2 <= n <= 10^12");
    }
    if (n < 4) {
        return Verdict::probably_prime(0);
    }
    if (n % 2 == 0) {
        return Verdict::composite(2);
    }
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return Verdict::composite(d);
        }
    }
    return Verdict::probably_prime(0);
}

} // namespace rsatoy
