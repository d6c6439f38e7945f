#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbdq {

/// Malformed textual or JSON input. Line and column are 1-based; zero means unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A precondition on a domain value was violated (e.g. f = 0 for the block family).
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace rbdq
