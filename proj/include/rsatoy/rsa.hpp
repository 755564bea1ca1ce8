#pragma once

/**
 * @file rsa.hpp
 * @brief Textbook RSA over 64-bit moduli: key generation, encrypt, decrypt.
 *
 * Primes are drawn from a sieved table of the first 10,000 primes, at a
 * random index in [index_min, index_max], and confirmed with the
 * Fermat + Miller-Rabin pipeline. The public exponent is drawn uniformly
 * from [3, phi-1] until it is coprime to phi; the private exponent is its
 * inverse mod phi.
 *
 * Messages and ciphers are single integers in [0, n). Out-of-range inputs
 * are rejected, never reduced.
 */

#include <cstdint>
#include <limits>
#include <string>

#include "errors.hpp"
#include "modarith.hpp"
#include "primality.hpp"
#include "random.hpp"
#include "sieve.hpp"

namespace rsatoy {

struct PublicKey {
    std::uint64_t e;
    std::uint64_t n;

    friend constexpr bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
    std::uint64_t d;
    std::uint64_t n;

    friend constexpr bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct KeyPair {
    PublicKey public_key;
    PrivateKey private_key;
    std::uint64_t p;
    std::uint64_t q;
    std::uint64_t phi;

    friend constexpr bool operator==(const KeyPair&, const KeyPair&) = default;
};

struct KeyGenParams {
    std::uint64_t seed = 0;
    std::uint32_t index_min = 1000;
    std::uint32_t index_max = 9999;
    std::uint32_t fermat_iters = default_fermat_iterations;
    std::uint32_t mr_iters = default_miller_rabin_iterations;
};

/// Redraw cap for the sampling loops; reaching it means the parameters are
/// degenerate, not that the generator was unlucky.
inline constexpr std::uint32_t max_redraws = 1'000'000;

namespace detail {

inline constexpr std::uint64_t seed_for_input_checks = 0x5253412D746F7931ULL;

inline void require_index_range(const PrimeTable& table, const KeyGenParams& params)
{
    if (params.index_min > params.index_max || params.index_max >= 10000) {
        throw domain_error("prime index range must satisfy index_min <= index_max < 10000");
    }
    if (params.index_max >= table.size()) {
        throw domain_error("prime table has " + std::to_string(table.size()) +
                           " entries, index_max is " + std::to_string(params.index_max));
    }
}

inline bool passes_pipeline(std::uint64_t candidate, const KeyGenParams& params, RngState& rng)
{
    return candidate >= 2 &&
           is_probable_prime(candidate, params.fermat_iters, params.mr_iters, rng).is_probably_prime();
}

} // namespace detail

/// The table of the first 10,000 primes, built once.
inline const PrimeTable& default_prime_table()
{
    static const PrimeTable table = sieve_primes(default_sieve_limit);
    return table;
}

inline std::uint64_t sample_prime_candidate(const PrimeTable& table, const KeyGenParams& params, RngState& rng)
{
    detail::require_index_range(table, params);
    for (std::uint32_t attempt = 0; attempt < max_redraws; ++attempt) {
        const auto index = static_cast<std::uint32_t>(rng.uniform(params.index_min, params.index_max));
        const std::uint64_t candidate = nth_prime(table, index);
        if (detail::passes_pipeline(candidate, params, rng)) {
            return candidate;
        }
    }
    throw internal_error("no prime candidate passed the primality pipeline");
}

/// Deterministic key pair from chosen primes and public exponent.
inline KeyPair keypair_from_primes(std::uint64_t p, std::uint64_t q, std::uint64_t e)
{
    if (p == q) {
        throw domain_error("identical primes");
    }
    RngState rng(detail::seed_for_input_checks);
    const KeyGenParams checks{};
    if (!detail::passes_pipeline(p, checks, rng) || !detail::passes_pipeline(q, checks, rng)) {
        throw domain_error("input not prime");
    }
    constexpr std::uint64_t modulus_limit = std::uint64_t{1} << 63;
    if (p > modulus_limit / q || p * q >= modulus_limit) {
        throw range_error("modulus p*q must be below 2^63");
    }
    const std::uint64_t n = p * q;
    const std::uint64_t phi = (p - 1) * (q - 1);
    if (e <= 1 || e >= phi) {
        throw domain_error("exponent out of range");
    }
    if (gcd(e, phi) != 1) {
        throw domain_error("exponent not coprime");
    }
    const std::uint64_t d = mod_inverse(e, phi);
    return {{e, n}, {d, n}, p, q, phi};
}

inline KeyPair generate_keypair(const PrimeTable& table, const KeyGenParams& params)
{
    if (params.index_min >= params.index_max) {
        throw domain_error("key generation needs index_min < index_max");
    }
    RngState rng(params.seed);
    const std::uint64_t p = sample_prime_candidate(table, params, rng);
    std::uint64_t q = sample_prime_candidate(table, params, rng);
    for (std::uint32_t attempt = 0; q == p; ++attempt) {
        if (attempt == max_redraws) {
            throw internal_error("could not draw a second distinct prime");
        }
        q = sample_prime_candidate(table, params, rng);
    }

    constexpr std::uint64_t modulus_limit = std::uint64_t{1} << 63;
    if (p > modulus_limit / q) {
        throw range_error("modulus p*q must be below 2^63");
    }
    const std::uint64_t n = p * q;
    const std::uint64_t phi = (p - 1) * (q - 1);
    if (phi < 4) {
        throw domain_error("phi too small to choose an exponent in [3, phi-1]");
    }

    for (std::uint32_t attempt = 0; attempt < max_redraws; ++attempt) {
        const std::uint64_t e = rng.uniform(3, phi - 1);
        if (gcd(e, phi) == 1) {
            return {{e, n}, {mod_inverse(e, phi), n}, p, q, phi};
        }
    }
    throw internal_error("no public exponent coprime to phi found");
}

inline KeyPair generate_keypair(const KeyGenParams& params)
{
    return generate_keypair(default_prime_table(), params);
}

inline std::uint64_t encrypt(const PublicKey& key, std::uint64_t message,
                             ExpMethod method = ExpMethod::SquareMultiply)
{
    if (message >= key.n) {
        throw domain_error("message out of range");
    }
    return modexp(message, key.e, key.n, method);
}

inline std::uint64_t decrypt(const PrivateKey& key, std::uint64_t cipher,
                             ExpMethod method = ExpMethod::SquareMultiply)
{
    if (cipher >= key.n) {
        throw domain_error("cipher out of range");
    }
    return modexp(cipher, key.d, key.n, method);
}

} // namespace rsatoy
