#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it in-process with their own output streams.
//
// Exit status: 0 success (or probably-prime), 1 domain error (or composite),
// 2 usage error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "errors.hpp"
#include "keyfile.hpp"
#include "primality.hpp"
#include "rsa.hpp"

namespace rsatoy::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t parse_decimal(std::string_view flag, const std::string& text)
{
    std::uint64_t value = 0;
    const bool digits_only = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (!digits_only || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw usage_error(std::string(flag) + ": expected a decimal unsigned 64-bit integer, got '" + text + "'");
    }
    return value;
}

inline std::uint32_t parse_decimal32(std::string_view flag, const std::string& text)
{
    const std::uint64_t value = parse_decimal(flag, text);
    if (value > 0xFFFFFFFFULL) {
        throw usage_error(std::string(flag) + ": value too large");
    }
    return static_cast<std::uint32_t>(value);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
}

inline std::string format_key(std::uint64_t exponent, std::uint64_t modulus)
{
    return "{" + std::to_string(exponent) + "," + std::to_string(modulus) + "}";
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Textbook RSA over 64-bit moduli", "rsa-toy"};
    app.require_subcommand(1);

    struct {
        std::string out_prefix;
        std::optional<std::string> seed, fermat_iters, mr_iters, index_min, index_max;
    } keygen;
    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair and write PREFIX.pub / PREFIX.priv");
    keygen_cmd->add_option("--out-prefix", keygen.out_prefix, "Output path prefix")->required();
    keygen_cmd->add_option("--seed", keygen.seed, "RNG seed (random if omitted)");
    keygen_cmd->add_option("--fermat-iters", keygen.fermat_iters, "Fermat rounds (default 5)");
    keygen_cmd->add_option("--mr-iters", keygen.mr_iters, "Miller-Rabin rounds (default 20)");
    keygen_cmd->add_option("--index-min", keygen.index_min, "Lowest prime-table index (default 1000)");
    keygen_cmd->add_option("--index-max", keygen.index_max, "Highest prime-table index (default 9999)");

    std::string key_path, number;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a numeric message with a public key");
    encrypt_cmd->add_option("--key", key_path, "Public key file")->required();
    encrypt_cmd->add_option("--message", number, "Message, decimal, below n")->required();

    auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a numeric cipher with a private key");
    decrypt_cmd->add_option("--key", key_path, "Private key file")->required();
    decrypt_cmd->add_option("--cipher", number, "Cipher, decimal, below n")->required();

    std::optional<std::string> check_mr_iters, check_seed;
    auto* check_cmd = app.add_subcommand("check-prime", "Probable-prime test (exit 0 prime, 1 composite)");
    check_cmd->add_option("N", number, "Number to test")->required();
    check_cmd->add_option("--mr-iters", check_mr_iters, "Miller-Rabin rounds (default 20)");
    check_cmd->add_option("--seed", check_seed, "RNG seed (default 0)");

    struct {
        std::string seed = "0", trials = "7", method = "both", message = "25000", budget = "120";
        std::optional<std::string> out_path;
    } bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time naive vs square-and-multiply decryption, emit CSV");
    bench_cmd->add_option("--seed", bench.seed, "RNG seed")->capture_default_str();
    bench_cmd->add_option("--trials", bench.trials, "Number of key pairs")->capture_default_str();
    bench_cmd->add_option("--method", bench.method, "naive | fast | both")
        ->check(CLI::IsMember({"naive", "fast", "both"}))
        ->capture_default_str();
    bench_cmd->add_option("--message", bench.message, "Plaintext to encrypt")->capture_default_str();
    bench_cmd->add_option("--budget", bench.budget, "Naive time budget per trial, seconds")->capture_default_str();
    bench_cmd->add_option("--out", bench.out_path, "CSV output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (*keygen_cmd) {
            KeyGenParams params;
            params.seed = keygen.seed ? detail::parse_decimal("--seed", *keygen.seed) : std::random_device{}();
            if (keygen.fermat_iters) {
                params.fermat_iters = detail::parse_decimal32("--fermat-iters", *keygen.fermat_iters);
            }
            if (keygen.mr_iters) {
                params.mr_iters = detail::parse_decimal32("--mr-iters", *keygen.mr_iters);
            }
            if (keygen.index_min) {
                params.index_min = detail::parse_decimal32("--index-min", *keygen.index_min);
            }
            if (keygen.index_max) {
                params.index_max = detail::parse_decimal32("--index-max", *keygen.index_max);
            }
            const KeyPair keys = generate_keypair(params);
            detail::write_file(keygen.out_prefix + ".pub", write_key(to_document(keys.public_key)));
            detail::write_file(keygen.out_prefix + ".priv", write_key(to_document(keys.private_key)));
            out << "p: " << keys.p << "\n"
                << "q: " << keys.q << "\n"
                << "phi: " << keys.phi << "\n"
                << "public key: " << detail::format_key(keys.public_key.e, keys.public_key.n) << "\n"
                << "private key: " << detail::format_key(keys.private_key.d, keys.private_key.n) << "\n";
            return exit_ok;
        }
        if (*encrypt_cmd) {
            const std::uint64_t message = detail::parse_decimal("--message", number);
            const PublicKey key = to_public_key(read_key(detail::read_file(key_path)));
            out << encrypt(key, message) << "\n";
            return exit_ok;
        }
        if (*decrypt_cmd) {
            const std::uint64_t cipher = detail::parse_decimal("--cipher", number);
            const PrivateKey key = to_private_key(read_key(detail::read_file(key_path)));
            out << decrypt(key, cipher) << "\n";
            return exit_ok;
        }
        if (*check_cmd) {
            const std::uint64_t n = detail::parse_decimal("N", number);
            const std::uint32_t mr_iters =
                check_mr_iters ? detail::parse_decimal32("--mr-iters", *check_mr_iters) : default_miller_rabin_iterations;
            RngState rng(check_seed ? detail::parse_decimal("--seed", *check_seed) : 0);
            const Verdict verdict = is_probable_prime(n, default_fermat_iterations, mr_iters, rng);
            out << (verdict.is_probably_prime() ? "probably-prime" : "composite") << "\n";
            return verdict.is_probably_prime() ? exit_ok : exit_failure;
        }
        if (*bench_cmd) {
            std::vector<ExpMethod> methods;
            if (bench.method != "fast") {
                methods.push_back(ExpMethod::Naive);
            }
            if (bench.method != "naive") {
                methods.push_back(ExpMethod::SquareMultiply);
            }
            BenchConfig config;
            double budget = 0.0;
            const auto [ptr, ec] =
                std::from_chars(bench.budget.data(), bench.budget.data() + bench.budget.size(), budget);
            if (ec != std::errc{} || ptr != bench.budget.data() + bench.budget.size() || !(budget > 0.0)) {
                throw detail::usage_error("--budget: expected a positive number of seconds");
            }
            config.naive_budget_seconds = budget;

            const auto records = run_bench(detail::parse_decimal("--seed", bench.seed),
                                           detail::parse_decimal32("--trials", bench.trials), methods,
                                           detail::parse_decimal("--message", bench.message), config);
            for (const auto& r : records) {
                if (r.skipped) {
                    err << "warning: skipped naive decrypt for d = " << r.d << " (over "
                        << config.naive_budget_seconds << " s budget)\n";
                }
            }
            const std::string csv = write_csv(records);
            if (bench.out_path) {
                detail::write_file(*bench.out_path, csv);
            } else {
                out << csv;
            }
            return exit_ok;
        }
    } catch (const detail::usage_error& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("rsa-toy");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace rsatoy::cli
