#ifndef NONNEG_ERRORS_HPP
#define NONNEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nonneg {

/// Caller supplied arguments outside an operation's domain.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (number literal, matrix file, report).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine could not deliver a result satisfying its contract
/// (non-convergence, iteration cap, residual bound violated).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Neither V nor its orthogonal complement produced a nonzero nonnegative
/// vector. Mathematically impossible, so this always indicates a numerical
/// breakdown.
class PropositionViolation : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace nonneg

#endif  // NONNEG_ERRORS_HPP
