#pragma once

/**
 * @file bench.hpp
 * @brief Decryption timing study: naive exponentiation vs square-and-multiply.
 *
 * Each trial generates a fresh key pair, encrypts a fixed message and times
 * the decryption with every requested method. The naive loop costs Theta(d)
 * multiplications, so its time tracks the random size of d; the
 * square-and-multiply path costs O(log d).
 *
 * Before the trial loop each method gets one untimed warm-up. For the naive
 * method the warm-up is a capped run that also calibrates the cost per
 * multiplication, which is used to skip trials whose estimated time exceeds
 * the configured budget. Skipped trials are still reported, flagged as such.
 */

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "modarith.hpp"
#include "random.hpp"
#include "rsa.hpp"

namespace rsatoy {

inline constexpr std::uint64_t default_bench_message = 25'000;

struct BenchRecord {
    std::uint64_t phi;
    std::uint64_t d;
    ExpMethod method;
    double elapsed_seconds;
    std::uint64_t message;
    bool skipped = false;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchConfig {
    // Largest prime at index 5000 is 48,619, so n stays under naive_modulus_limit.
    KeyGenParams keygen{.seed = 0, .index_min = 1000, .index_max = 5000};
    double naive_budget_seconds = 120.0;
    std::uint64_t calibration_steps = 1'000'000;
};

namespace detail {

template <typename F>
double time_seconds(F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

inline bool contains(std::span<const ExpMethod> methods, ExpMethod wanted)
{
    return std::find(methods.begin(), methods.end(), wanted) != methods.end();
}

} // namespace detail

inline std::vector<BenchRecord> run_bench(std::uint64_t seed, std::uint32_t trials,
                                          std::span<const ExpMethod> methods,
                                          std::uint64_t message = default_bench_message,
                                          const BenchConfig& config = {})
{
    if (methods.empty()) {
        throw domain_error("no exponentiation method selected");
    }
    if (trials == 0) {
        throw domain_error("trial count must be at least 1");
    }
    const bool want_naive = detail::contains(methods, ExpMethod::Naive);
    const PrimeTable& table = default_prime_table();
    RngState rng(seed);

    auto draw_keypair = [&] {
        for (std::uint32_t attempt = 0; attempt < max_redraws; ++attempt) {
            KeyGenParams params = config.keygen;
            params.seed = rng.next();
            KeyPair keys = generate_keypair(table, params);
            if (!want_naive || keys.public_key.n <= naive_modulus_limit) {
                return keys;
            }
        }
        throw internal_error("no key pair small enough for the naive path");
    };

    KeyPair keys = draw_keypair();
    std::optional<double> naive_seconds_per_step;
    {
        const std::uint64_t cipher = encrypt(keys.public_key, message % keys.public_key.n);
        (void)decrypt(keys.private_key, cipher);
        if (want_naive) {
            const std::uint64_t steps = std::max<std::uint64_t>(config.calibration_steps, 1);
            volatile std::uint64_t sink = 0;
            const double elapsed = detail::time_seconds([&] { sink = modexp_naive(cipher, steps, keys.public_key.n); });
            (void)sink;
            naive_seconds_per_step = elapsed / static_cast<double>(steps);
        }
    }

    std::vector<BenchRecord> records;
    records.reserve(static_cast<std::size_t>(trials) * methods.size());
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        if (trial > 0) {
            keys = draw_keypair();
        }
        if (message >= keys.public_key.n) {
            throw domain_error("message out of range");
        }
        const std::uint64_t cipher = encrypt(keys.public_key, message);
        const std::uint64_t d = keys.private_key.d;

        for (const ExpMethod method : methods) {
            BenchRecord record{keys.phi, d, method, 0.0, message, false};
            if (method == ExpMethod::Naive &&
                static_cast<double>(d) * *naive_seconds_per_step > config.naive_budget_seconds) {
                record.skipped = true;
                records.push_back(record);
                continue;
            }
            std::uint64_t recovered = 0;
            record.elapsed_seconds = detail::time_seconds([&] { recovered = decrypt(keys.private_key, cipher, method); });
            if (recovered != message) {
                throw internal_error("decryption did not recover the message");
            }
            records.push_back(record);
        }
    }
    return records;
}

inline std::vector<BenchRecord> run_bench(std::uint64_t seed, std::uint32_t trials,
                                          std::initializer_list<ExpMethod> methods,
                                          std::uint64_t message = default_bench_message,
                                          const BenchConfig& config = {})
{
    return run_bench(seed, trials, std::span<const ExpMethod>(methods.begin(), methods.size()), message, config);
}

inline constexpr std::string_view bench_csv_header = "phi,d,method,elapsed_seconds,message";

inline std::string format_seconds(double seconds)
{
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, seconds, std::chars_format::fixed, 9);
    if (ec != std::errc{}) {
        throw range_error("elapsed time not representable");
    }
    return std::string(buffer, ptr);
}

/// Header plus one LF-terminated row per record. Skipped rows leave
/// elapsed_seconds empty.
inline std::string write_csv(std::span<const BenchRecord> records)
{
    std::string out(bench_csv_header);
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.phi);
        out += ',';
        out += std::to_string(r.d);
        out += ',';
        out += to_string(r.method);
        out += ',';
        if (!r.skipped) {
            out += format_seconds(r.elapsed_seconds);
        }
        out += ',';
        out += std::to_string(r.message);
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::uint64_t parse_csv_uint(std::string_view field)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw domain_error("bad integer field '" + std::string(field) + "'");
    }
    return value;
}

} // namespace detail

/// Inverse of write_csv.
inline std::vector<BenchRecord> parse_csv(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto lf = text.find('\n');
        if (lf == std::string_view::npos) {
            throw domain_error("unterminated CSV line");
        }
        lines.push_back(text.substr(0, lf));
        text.remove_prefix(lf + 1);
    }
    if (lines.empty() || lines.front() != bench_csv_header) {
        throw domain_error("missing bench CSV header");
    }

    std::vector<BenchRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string_view> fields;
        std::string_view rest = lines[i];
        for (auto comma = rest.find(','); comma != std::string_view::npos; comma = rest.find(',')) {
            fields.push_back(rest.substr(0, comma));
            rest.remove_prefix(comma + 1);
        }
        fields.push_back(rest);
        if (fields.size() != 5) {
            throw domain_error("bench CSV row " + std::to_string(i + 1) + " does not have 5 fields");
        }

        BenchRecord record{};
        record.phi = detail::parse_csv_uint(fields[0]);
        record.d = detail::parse_csv_uint(fields[1]);
        if (fields[2] == "naive") {
            record.method = ExpMethod::Naive;
        } else if (fields[2] == "fast") {
            record.method = ExpMethod::SquareMultiply;
        } else {
            throw domain_error("unknown method '" + std::string(fields[2]) + "'");
        }
        if (fields[3].empty()) {
            record.skipped = true;
        } else {
            const auto [ptr, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(),
                                                   record.elapsed_seconds, std::chars_format::fixed);
            if (ec != std::errc{} || ptr != fields[3].data() + fields[3].size()) {
                throw domain_error("bad elapsed_seconds '" + std::string(fields[3]) + "'");
            }
        }
        record.message = detail::parse_csv_uint(fields[4]);
        records.push_back(record);
    }
    return records;
}

// Summary statistics for the speedup and linearity checks.

inline std::vector<double> elapsed_of(std::span<const BenchRecord> records, ExpMethod method)
{
    std::vector<double> out;
    for (const auto& r : records) {
        if (r.method == method && !r.skipped) {
            out.push_back(r.elapsed_seconds);
        }
    }
    return out;
}

inline double median(std::vector<double> values)
{
    if (values.empty()) {
        throw domain_error("median of an empty sample");
    }
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    if (values.size() % 2 == 1) {
        return *mid;
    }
    const double upper = *mid;
    const double lower = *std::max_element(values.begin(), mid);
    return (lower + upper) / 2.0;
}

/// Sample standard deviation over mean.
inline double coefficient_of_variation(std::span<const double> values)
{
    if (values.size() < 2) {
        throw domain_error("coefficient of variation needs at least two values");
    }
    double mean = 0.0;
    for (const double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double sq = 0.0;
    for (const double v : values) {
        sq += (v - mean) * (v - mean);
    }
    return std::sqrt(sq / static_cast<double>(values.size() - 1)) / mean;
}

/// elapsed_seconds / d for every timed naive record.
inline std::vector<double> naive_seconds_per_unit_d(std::span<const BenchRecord> records)
{
    std::vector<double> out;
    for (const auto& r : records) {
        if (r.method == ExpMethod::Naive && !r.skipped && r.d > 0) {
            out.push_back(r.elapsed_seconds / static_cast<double>(r.d));
        }
    }
    return out;
}

} // namespace rsatoy
