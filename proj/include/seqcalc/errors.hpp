#pragma once

#include <stdexcept>

namespace seqcalc {

/// Base class for all recoverable library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient rings.
struct MixedRing : Error { using Error::Error; };

/// Multiplicative inverse requested for a non-unit.
struct NotAUnit : Error { using Error::Error; };

/// Exact division failed in the integer ring.
struct NotDivisible : Error { using Error::Error; };

/// A leading term violates the operation's requirement (must be 0 or 1).
struct BadConstantTerm : Error { using Error::Error; };

/// The input sequence is too short to determine the requested output.
struct InsufficientInput : Error { using Error::Error; };

/// A value that must be an integer came out non-integral.
struct IntegralityViolation : Error { using Error::Error; };

/// An argument required to be prime is not.
struct NotPrime : Error { using Error::Error; };

/// The operation is not defined over the operand's coefficient ring.
struct UnsupportedRing : Error { using Error::Error; };

/// Sequence or value text that does not parse.
struct ParseFailure : Error { using Error::Error; };

}  // namespace seqcalc
