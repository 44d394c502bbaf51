#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partrep {

/// An index, exponent or threshold fell outside the range a table or query supports.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A request would need more memory than the engine is willing to allocate.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Floating-point result not representable as a finite double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Least-squares system without a unique solution.
class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 means "no specific line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace partrep
