#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pseudolin {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition on a mathematical input (zero operator, non
/// square-free polynomial, singular matrix, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed expression text; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace pseudolin
