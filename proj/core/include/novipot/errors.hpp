#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novipot {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exponent that is not a multiple of 1/D, or two elements on different lattices.
class LatticeError : public Error {
public:
    using Error::Error;
};

/// A result whose tracked precision would fall below the configured floor.
class PrecisionError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation (e.g. exp of a non-positive valuation).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The square root would need an algebraic extension of Q (leading coefficient not a square).
class FieldExtensionError : public Error {
public:
    using Error::Error;
};

class NameError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Newton/Hensel lifting could not proceed (singular Jacobian or no convergence).
class LiftFailure : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace novipot
