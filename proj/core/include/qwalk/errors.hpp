#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Invalid input data: bad dimensions, broken invariants, out-of-range indices.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t line)
        : ValidationError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An iterative kernel failed to converge or lost accuracy beyond its contract.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qwalk
