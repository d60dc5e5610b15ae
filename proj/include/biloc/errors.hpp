#pragma once

#include <stdexcept>
#include <string>

namespace biloc {

/// Malformed arguments, configs, or out-of-contract values. CLI exit code 1.
class InvalidInputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A tolerance check failed inside a computation (normalization drift,
/// imaginary residue, out-of-range sample). CLI exit code 2.
class NumericalConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A guaranteed-existence search came up empty; indicates a broken
/// invariant upstream (e.g. a frame that is not actually a triad).
class TheoremViolationError : public NumericalConsistencyError {
  public:
    using NumericalConsistencyError::NumericalConsistencyError;
};

/// The external randomness file ran out of words. Never wraps around.
class RandomnessExhaustedError : public InvalidInputError {
  public:
    using InvalidInputError::InvalidInputError;
};

} // namespace biloc
