#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace defarg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula or theory text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A user identifier used the '@' character reserved for assumptions.
class ReservedNameError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A programmatically built default theory violates a well-formedness rule.
class TheoryError : public Error {
public:
    using Error::Error;
};

/// Unknown default, bad justification index, or a term that is not a default term.
class LookupError : public Error {
public:
    using Error::Error;
};

/// A query formula mentions assumption-namespace propositions.
class QueryError : public Error {
public:
    using Error::Error;
};

/// Two independent computations that must agree did not.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace defarg
