#include <rsatoy/keyfile.hpp>

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <string>

namespace rsatoy {
namespace {

constexpr const char* example_public = "rsa-toy v1\nkind: public\nn: 760812959\ne: 11723299\n";

TEST(WriteKey, PublicKeyLayout)
{
    EXPECT_EQ(write_key({KeyKind::Public, 11723299, 760812959}), example_public);
}

TEST(WriteKey, MinimalPrivateKey)
{
    EXPECT_EQ(write_key({KeyKind::Private, 1, 6}), "rsa-toy v1\nkind: private\nn: 6\nd: 1\n");
}

TEST(ReadKey, ParsesPublicKey)
{
    EXPECT_EQ(read_key(example_public), (KeyDocument{KeyKind::Public, 11723299, 760812959}));
}

TEST(ReadKey, AcceptsCrlf)
{
    EXPECT_EQ(read_key("rsa-toy v1\r\nkind: private\r\nn: 760812959\r\nd: 288096259\r\n"),
              (KeyDocument{KeyKind::Private, 288096259, 760812959}));
}

TEST(ReadKey, RoundTripRandomKeys)
{
    std::mt19937_64 gen(31);
    for (int i = 0; i < 2000; ++i) {
        const KeyDocument doc{gen() % 2 ? KeyKind::Public : KeyKind::Private, gen() % (gen() | 1) + 1,
                              std::max<std::uint64_t>(gen() >> (gen() % 60), 6)};
        const std::string text = write_key(doc);
        ASSERT_EQ(read_key(text), doc);
        ASSERT_EQ(write_key(read_key(text)), text);
    }
}

template <typename Error>
std::string error_message(const std::string& text)
{
    try {
        read_key(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "<no error>";
}

TEST(ReadKey, UnrecognizedFormat)
{
    EXPECT_EQ(error_message<format_error>(""), "unrecognized format");
    EXPECT_EQ(error_message<format_error>("rsa-toy v2\nkind: public\nn: 6\ne: 1\n"), "unrecognized format");
    EXPECT_EQ(error_message<format_error>("-----BEGIN RSA PUBLIC KEY-----\n"), "unrecognized format");
    // Unterminated last line.
    EXPECT_EQ(error_message<format_error>("rsa-toy v1\nkind: public\nn: 6\ne: 1"), "unrecognized format");
    EXPECT_THROW(read_key("rsa-toy v1\nkind: public\nn: 6\ne: 1\n\n"), format_error);
    EXPECT_THROW(read_key("rsa-toy v1\nkind: public\n"), format_error);
}

TEST(ReadKey, InconsistentKey)
{
    EXPECT_EQ(error_message<format_error>("rsa-toy v1\nkind: public\nn: 760812959\nd: 288096259\n"),
              "inconsistent key");
    EXPECT_EQ(error_message<format_error>("rsa-toy v1\nkind: private\nn: 760812959\ne: 11723299\n"),
              "inconsistent key");
}

TEST(ReadKey, ParseErrorsCarryLineNumbers)
{
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            read_key(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("rsa-toy v1\nkind: secret\nn: 6\ne: 1\n"), 2U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 0x10\ne: 1\n"), 3U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 18446744073709551616\ne: 1\n"), 3U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 007\ne: 1\n"), 3U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 5\ne: 1\n"), 3U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn:  6\ne: 1\n"), 3U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nmodulus: 6\ne: 1\n"), 3U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 6\ne: -1\n"), 4U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 6\ne: 0\n"), 4U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 6\ne: 1 \n"), 4U);
    EXPECT_EQ(line_of("rsa-toy v1\nkind: public\nn: 6\nx: 1\n"), 4U);
}

TEST(ReadKey, SurvivesFuzzedInput)
{
    const std::string seed_text = write_key({KeyKind::Private, 288096259, 760812959});
    std::mt19937_64 gen(8);
    for (int i = 0; i < 20000; ++i) {
        std::string text = seed_text;
        const int edits = 1 + static_cast<int>(gen() % 4);
        for (int k = 0; k < edits; ++k) {
            const auto pos = gen() % (text.size() + 1);
            switch (gen() % 3) {
            case 0:
                if (!text.empty()) {
                    text[pos % text.size()] = static_cast<char>(gen() % 256);
                }
                break;
            case 1:
                text.insert(text.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<char>(gen() % 256));
                break;
            default:
                if (!text.empty()) {
                    text.erase(pos % text.size(), 1);
                }
                break;
            }
        }
        try {
            const auto doc = read_key(text);
            ASSERT_GE(doc.exponent, 1U);
            ASSERT_GE(doc.modulus, min_key_modulus);
        } catch (const format_error&) {
        } catch (const parse_error&) {
        }
    }
}

TEST(KeyConversion, KindIsChecked)
{
    const PublicKey pub{11723299, 760812959};
    EXPECT_EQ(to_public_key(to_document(pub)), pub);
    EXPECT_THROW(to_private_key(to_document(pub)), format_error);
}

} // namespace
} // namespace rsatoy
