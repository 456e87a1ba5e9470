#ifndef QID_ERRORS_HPP
#define QID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& where = "division by zero")
        : Error(where) {}
};

class UndefinedGcd : public Error {
public:
    UndefinedGcd() : Error("gcd of two zero polynomials is undefined") {}
};

class PoleAtEvaluation : public Error {
public:
    using Error::Error;
};

class DuplicatePoint : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

// Raised when a division that must be exact leaves a remainder. Never
// triggered by user input.
class InternalNonExactDivision : public Error {
public:
    using Error::Error;
};

class GridExhausted : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace qid

#endif  // QID_ERRORS_HPP
