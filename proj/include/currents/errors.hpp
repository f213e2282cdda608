#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace currents {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual or JSON input. `context` names the offending field.
class ParseError : public Error {
public:
    ParseError(std::string context, std::string message)
        : Error(context.empty() ? message : context + ": " + message),
          context_(std::move(context)),
          message_(std::move(message)) {}
    const std::string& context() const noexcept { return context_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string context_;
    std::string message_;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class LinearlyDependentBasis : public Error {
public:
    explicit LinearlyDependentBasis(std::size_t index)
        : Error("basis element " + std::to_string(index) +
                " is a linear combination of the preceding elements"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NonClosedBasis : public Error {
public:
    NonClosedBasis(std::size_t a, std::size_t b)
        : Error("commutator of basis elements (" + std::to_string(a) + ", " + std::to_string(b) +
                ") lies outside the span of the basis"),
          a_(a), b_(b) {}
    std::size_t first() const noexcept { return a_; }
    std::size_t second() const noexcept { return b_; }

private:
    std::size_t a_, b_;
};

/// A structural identity (antisymmetry, Jacobi, ad-invariance, ...) failed.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace currents
