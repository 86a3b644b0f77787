#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcrank {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class OrderTooLarge : public Error {
public:
    using Error::Error;
};

/// A size guard (chain-rank dimension limit or oracle limit) was exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class RejectionLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Parse failure with 1-based line/column of the offending character.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace bcrank
