#include "rbdq/errors.hpp"

namespace rbdq {

namespace {

std::string with_position(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) {
        return message;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(with_position(message, line, column)), line_(line), column_(column) {}

}  // namespace rbdq
