#pragma once

// Plain-text key files:
//
//     rsa-toy v1
//     kind: public
//     n: 760812959
//     e: 11723299
//
// Private keys use "kind: private" and a "d:" line. Writers emit LF line
// endings; the reader also accepts CRLF.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "rsa.hpp"

namespace rsatoy {

enum class KeyKind { Public, Private };

struct KeyDocument {
    KeyKind kind;
    std::uint64_t exponent;
    std::uint64_t modulus;

    friend constexpr bool operator==(const KeyDocument&, const KeyDocument&) = default;
};

inline constexpr std::string_view key_file_magic = "rsa-toy v1";
inline constexpr std::uint64_t min_key_modulus = 6;

inline KeyDocument to_document(const PublicKey& key) { return {KeyKind::Public, key.e, key.n}; }
inline KeyDocument to_document(const PrivateKey& key) { return {KeyKind::Private, key.d, key.n}; }

inline PublicKey to_public_key(const KeyDocument& doc)
{
    if (doc.kind != KeyKind::Public) {
        throw format_error("expected a public key");
    }
    return {doc.exponent, doc.modulus};
}

inline PrivateKey to_private_key(const KeyDocument& doc)
{
    if (doc.kind != KeyKind::Private) {
        throw format_error("expected a private key");
    }
    return {doc.exponent, doc.modulus};
}

inline std::string write_key(const KeyDocument& doc)
{
    const bool is_public = doc.kind == KeyKind::Public;
    std::string out;
    out.append(key_file_magic).append("\n");
    out.append(is_public ? "kind: public\n" : "kind: private\n");
    out.append("n: ").append(std::to_string(doc.modulus)).append("\n");
    out.append(is_public ? "e: " : "d: ").append(std::to_string(doc.exponent)).append("\n");
    return out;
}

namespace detail {

// Splits into lines, each terminated by LF or CRLF. Returns false if the
// final line is unterminated or a bare CR appears.
inline bool split_key_lines(std::string_view text, std::vector<std::string_view>& lines)
{
    while (!text.empty()) {
        const auto lf = text.find('\n');
        if (lf == std::string_view::npos) {
            return false;
        }
        std::string_view line = text.substr(0, lf);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.find('\r') != std::string_view::npos) {
            return false;
        }
        lines.push_back(line);
        text.remove_prefix(lf + 1);
    }
    return true;
}

inline std::uint64_t parse_key_decimal(std::string_view digits, std::size_t line_no)
{
    if (digits.empty()) {
        throw parse_error(line_no, "missing value");
    }
    for (const char c : digits) {
        if (c < '0' || c > '9') {
            throw parse_error(line_no, "not a decimal integer: '" + std::string(digits) + "'");
        }
    }
    if (digits.size() > 1 && digits.front() == '0') {
        throw parse_error(line_no, "leading zero in '" + std::string(digits) + "'");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw parse_error(line_no, "integer overflows 64 bits");
    }
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw parse_error(line_no, "not a decimal integer: '" + std::string(digits) + "'");
    }
    return value;
}

} // namespace detail

inline KeyDocument read_key(std::string_view text)
{
    std::vector<std::string_view> lines;
    if (!detail::split_key_lines(text, lines) || lines.empty() || lines[0] != key_file_magic) {
        throw format_error("unrecognized format");
    }
    if (lines.size() != 4) {
        throw format_error("unrecognized format: expected 4 lines, found " + std::to_string(lines.size()));
    }

    KeyKind kind;
    if (lines[1] == "kind: public") {
        kind = KeyKind::Public;
    } else if (lines[1] == "kind: private") {
        kind = KeyKind::Private;
    } else {
        throw parse_error(2, "expected 'kind: public' or 'kind: private'");
    }

    constexpr std::string_view modulus_label = "n: ";
    if (!lines[2].starts_with(modulus_label)) {
        throw parse_error(3, "expected 'n: <decimal>'");
    }
    const std::uint64_t modulus = detail::parse_key_decimal(lines[2].substr(modulus_label.size()), 3);
    if (modulus < min_key_modulus) {
        throw parse_error(3, "modulus must be at least 6");
    }

    const std::string_view exponent_line = lines[3];
    const bool has_e = exponent_line.starts_with("e: ");
    const bool has_d = exponent_line.starts_with("d: ");
    if (!has_e && !has_d) {
        throw parse_error(4, "expected 'e: <decimal>' or 'd: <decimal>'");
    }
    if (has_e != (kind == KeyKind::Public)) {
        throw format_error("inconsistent key");
    }
    const std::uint64_t exponent = detail::parse_key_decimal(exponent_line.substr(3), 4);
    if (exponent == 0) {
        throw parse_error(4, "exponent must be at least 1");
    }
    return {kind, exponent, modulus};
}

} // namespace rsatoy
