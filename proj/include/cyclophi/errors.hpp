#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclophi {

// Raised when a value leaves the checked 64-bit fast path. Coefficients are
// exact integers by contract, so wraparound is always an error, never a mode.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A resume was requested against a CSV whose sidecar manifest does not match
// the file contents (or the current engine version).
class ManifestMismatchError : public IoError {
public:
    explicit ManifestMismatchError(const std::string& what) : IoError(what) {}
};

class CsvError : public IoError {
public:
    CsvError(const std::string& path, std::size_t line, const std::string& what)
        : IoError(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace cyclophi
