#pragma once

/**
 * @file modarith.hpp
 * @brief Modular arithmetic over 64-bit words.
 *
 * Everything here is a pure function of its arguments. Residues are plain
 * std::uint64_t values; the modulus is passed to each call rather than
 * stored, so the same value can be viewed modulo different n.
 *
 * mulmod and modexp are exact for any modulus n < 2^63 (in practice for any
 * n >= 1, since the product is formed in 128 bits). modexp_naive mirrors the
 * textbook "multiply e times" loop in plain 64-bit arithmetic and therefore
 * refuses moduli above naive_modulus_limit.
 */

#include <cstdint>
#include <string_view>

#include "errors.hpp"

namespace rsatoy {

enum class ExpMethod { Naive, SquareMultiply };

constexpr std::string_view to_string(ExpMethod method) noexcept
{
    return method == ExpMethod::Naive ? "naive" : "fast";
}

/// floor(2^31.5): the largest n for which (n-1)^2 still fits below 2^63.
inline constexpr std::uint64_t naive_modulus_limit = 3'037'000'499ULL;

namespace detail {

constexpr void require_modulus(std::uint64_t n)
{
    if (n == 0) {
        throw domain_error("zero modulus");
    }
}

} // namespace detail

/// (a * b) mod n without overflow.
constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    detail::require_modulus(n);
    const unsigned __int128 product = static_cast<unsigned __int128>(a % n) * (b % n);
    return static_cast<std::uint64_t>(product % n);
}

/// base^exp mod n by right-to-left binary square-and-multiply.
constexpr std::uint64_t modexp(std::uint64_t base, std::uint64_t exp, std::uint64_t n)
{
    detail::require_modulus(n);
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp != 0) {
        if (exp & 1U) {
            result = mulmod(result, base, n);
        }
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

/// base^exp mod n as exp sequential multiplications. Theta(exp) time; kept for
/// benchmarking against modexp.
constexpr std::uint64_t modexp_naive(std::uint64_t base, std::uint64_t exp, std::uint64_t n)
{
    detail::require_modulus(n);
    if (n > naive_modulus_limit) {
        throw domain_error("modulus too large for naive path");
    }
    base %= n;
    std::uint64_t result = 1 % n;
    for (std::uint64_t i = 0; i < exp; ++i) {
        result = result * base % n;
    }
    return result;
}

constexpr std::uint64_t modexp(std::uint64_t base, std::uint64_t exp, std::uint64_t n, ExpMethod method)
{
    return method == ExpMethod::Naive ? modexp_naive(base, exp, n) : modexp(base, exp, n);
}

constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 && b == 0) {
        throw domain_error("gcd(0, 0) is undefined");
    }
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

struct ExtGcdResult {
    std::uint64_t g;
    std::int64_t x;
    std::int64_t y;

    friend constexpr bool operator==(const ExtGcdResult&, const ExtGcdResult&) = default;
};

/// g = gcd(a, b) together with Bezout coefficients a*x + b*y = g.
/// Arguments must be below 2^63 so the coefficients fit in int64.
constexpr ExtGcdResult ext_gcd(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 && b == 0) {
        throw domain_error("ext_gcd(0, 0) is undefined");
    }
    constexpr std::uint64_t limit = std::uint64_t{1} << 63;
    if (a >= limit || b >= limit) {
        throw range_error("ext_gcd arguments must be below 2^63");
    }

    // Invariant: old_r = a*old_x + b*old_y and r = a*x + b*y.
    __int128 old_r = a, r = b;
    __int128 old_x = 1, x = 0;
    __int128 old_y = 0, y = 1;
    while (r != 0) {
        const __int128 q = old_r / r;
        const __int128 next_r = old_r - q * r;
        old_r = r;
        r = next_r;
        const __int128 next_x = old_x - q * x;
        old_x = x;
        x = next_x;
        const __int128 next_y = old_y - q * y;
        old_y = y;
        y = next_y;
    }
    return {static_cast<std::uint64_t>(old_r), static_cast<std::int64_t>(old_x),
            static_cast<std::int64_t>(old_y)};
}

/// The unique d in [1, m) with (d * e) mod m == 1.
constexpr std::uint64_t mod_inverse(std::uint64_t e, std::uint64_t m)
{
    if (m < 2) {
        throw domain_error("modulus must be at least 2");
    }
    constexpr std::uint64_t limit = std::uint64_t{1} << 63;
    if (m >= limit) {
        throw range_error("mod_inverse modulus must be below 2^63");
    }
    const auto [g, x, y] = ext_gcd(e % m, m);
    (void)y;
    if (g != 1) {
        throw domain_error("not invertible");
    }
    const __int128 d = x < 0 ? static_cast<__int128>(x) + m : static_cast<__int128>(x);
    return static_cast<std::uint64_t>(d);
}

} // namespace rsatoy
