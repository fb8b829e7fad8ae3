#pragma once

#include <stdexcept>
#include <string>

namespace starmat {

// Operands live in different phase spaces (mismatched numbers of (x,p)
// pairs) or a variable index is out of range.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// The operation is defined only on the plane (one (x,p) pair) and was
// called with more pairs.
class UnsupportedDimensionError : public DimensionError {
public:
    explicit UnsupportedDimensionError(const std::string& what) : DimensionError(what) {}
};

// An exponent would exceed the hard degree cap (2^31 - 1). We fail loudly
// instead of wrapping.
class ExponentOverflowError : public std::overflow_error {
public:
    explicit ExponentOverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Lexical or syntax error in the expression language. `offset` is the byte
// position in the input; `expected` describes what would have been legal.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset, std::string expected = {})
        : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace starmat
