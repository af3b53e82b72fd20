#pragma once

#include <stdexcept>
#include <string>

namespace scring {

// Base class of all library exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// q (or a requested modulus size) is not a prime power.
class NotPrimePower : public Error {
public:
    using Error::Error;
};

// Multiplicative inverse of zero requested.
class ZeroInverse : public Error {
public:
    using Error::Error;
};

// Mixed operands from two different field descriptors.
class DescriptorMismatch : public Error {
public:
    using Error::Error;
};

// Operation requires odd characteristic.
class EvenCharacteristic : public Error {
public:
    using Error::Error;
};

// A zero pattern that no invertible 2x2 matrix can have.
class UnreachablePattern : public Error {
public:
    using Error::Error;
};

// q outside the domain of the requested construction (e.g. q = 2).
class UnsupportedField : public Error {
public:
    using Error::Error;
};

// Mixed operands living over two different groups.
class GroupMismatch : public Error {
public:
    using Error::Error;
};

// An exact int64 computation would wrap.
class IntegerOverflow : public Error {
public:
    using Error::Error;
};

// Element does not span a one-dimensional ideal of its subalgebra.
class NotRankOne : public Error {
public:
    using Error::Error;
};

// Modulus shares a factor with a denominator that must be inverted.
class NotCoprime : public Error {
public:
    using Error::Error;
};

// A numerically computed quantity failed to snap to an integer.
class NotNearInteger : public Error {
public:
    using Error::Error;
};

// Invalid representation parameters (characters out of range, equal W pair, ...).
class InvalidSpec : public Error {
public:
    using Error::Error;
};

// Too few sample points to pin down the coefficient polynomials.
class UnderdeterminedFit : public Error {
public:
    using Error::Error;
};

// Interpolated values are not integers.
class NonIntegerFit : public Error {
public:
    using Error::Error;
};

// Reconstructed polynomial disagrees with the closed-form table.
class InterpolationMismatch : public Error {
public:
    using Error::Error;
};

// Class-profile aggregation found two classes of one type with different sums.
class NotTypeConstant : public Error {
public:
    using Error::Error;
};

// Profile of a projector is not constant where it has to be.
class NotPointwiseConstant : public Error {
public:
    using Error::Error;
};

// Bad runtime configuration (CLI arguments, environment caps).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace scring
