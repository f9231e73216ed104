#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codeloop {

/// Operands of incompatible length or dimension.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input parsed fine but violates a mathematical precondition (e.g. not doubly even).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Operands that belong to different groups or loops.
class ContextError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Requested enumeration or table would exceed the configured size limit.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A loop invariant that must hold by construction did not; indicates a bug.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace codeloop
