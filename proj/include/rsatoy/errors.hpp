#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsatoy {

// Precondition violated by an argument value (zero modulus, even MR input, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A value is representable in principle but exceeds a supported bound.
class range_error : public std::range_error {
public:
    using std::range_error::range_error;
};

// Sieve limit above the resource guard.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A loop that should terminate almost surely hit its safety cap.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Key file is not in the expected shape (bad magic, label mismatch).
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Key file field could not be parsed; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace rsatoy
