#pragma once

#include <stdexcept>
#include <string>

namespace otoc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotDiagonalError : public Error {
 public:
  using Error::Error;
};

/// Non-finite entries, non-normalized states, non-PSD density matrices and
/// out-of-range family parameters.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A derived quantity left its mathematically allowed range by more than
/// the tolerance window (e.g. fidelity > 1); points at a broken unitary.
class NumericConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Closed-form expression evaluated where its denominator vanishes.
class DegenerateParametersError : public Error {
 public:
  using Error::Error;
};

class InfeasibleConstraintsError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace otoc
