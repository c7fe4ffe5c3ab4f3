#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for all library errors.
struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A basis product violates additive well-definedness: d_i*mul(i,j) != 0.
struct IllDefinedError : RingError {
  std::size_t i, j;
  IllDefinedError(std::size_t i_, std::size_t j_, const std::string& msg)
      : RingError(msg), i(i_), j(j_) {}
};

/// Associativity fails on a basis triple.
struct NonAssociativeError : RingError {
  std::size_t i, j, l;
  NonAssociativeError(std::size_t i_, std::size_t j_, std::size_t l_,
                      const std::string& msg)
      : RingError(msg), i(i_), j(j_), l(l_) {}
};

struct BadUnityError : RingError {
  using RingError::RingError;
};

/// Operands belong to different rings.
struct RingMismatchError : RingError {
  using RingError::RingError;
};

/// An exhaustive operation would exceed the configured element cap.
struct CapExceededError : RingError {
  std::uint64_t required, cap;
  CapExceededError(std::uint64_t required_, std::uint64_t cap_,
                   const std::string& msg)
      : RingError(msg), required(required_), cap(cap_) {}
};

struct NonPositiveExponentError : RingError {
  using RingError::RingError;
};

struct NotIdempotentError : RingError {
  using RingError::RingError;
};

struct InvolutionMismatchError : RingError {
  using RingError::RingError;
};

/// (xy)* != y*x* for some pair.
struct NotAntiMultiplicativeError : RingError {
  using RingError::RingError;
};

/// (x*)* != x for some element.
struct NotInvolutiveError : RingError {
  using RingError::RingError;
};

struct NotPrimeError : RingError {
  using RingError::RingError;
};

/// Cayley table fails a group axiom; message carries the witness.
struct NotAGroupError : RingError {
  using RingError::RingError;
};

/// A relative-annihilator "within" subset is not a validated ideal.
struct WithinNotIdealError : RingError {
  using RingError::RingError;
};

/// A verification routine's stated hypothesis does not hold for the input.
struct HypothesisFailedError : RingError {
  using RingError::RingError;
};

/// A theorem harness was invoked with an excluded prime.
struct PrimeConstraintError : HypothesisFailedError {
  using HypothesisFailedError::HypothesisFailedError;
};

struct UnknownLabelError : RingError {
  using RingError::RingError;
};

/// Integer coefficient (or bare group/power label) used in a ring whose
/// construction has no integer-scalar block.
struct IllegalIntegerCoefficientError : RingError {
  using RingError::RingError;
};

/// Parse failure in an expression or document; position is 0-based.
struct ExprParseError : RingError {
  std::size_t pos;
  ExprParseError(std::size_t pos_, const std::string& msg)
      : RingError(msg), pos(pos_) {}
};

}  // namespace ringlab
