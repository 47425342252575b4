#pragma once

#include <stdexcept>
#include <string>

namespace segcalc {

/// Base class of every error raised by the calculus.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. Carries a 1-based position.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(std::move(message)), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

/// An operation was called outside its domain (e.g. n·d odd).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Cuspidal line data is inconsistent (bad k/l, dual mismatch, l ∤ k·d).
class InvalidLineError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace segcalc
