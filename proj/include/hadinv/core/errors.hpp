#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hadinv {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of the operands do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument or configuration value (non-finite entries, bad tolerances,
/// out-of-range indices, caps exceeded).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An entry that must be nonzero is (numerically) zero.
class ZeroEntryError : public Error {
 public:
  ZeroEntryError(std::size_t row, std::size_t col, const std::string& what);
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Numerical failure of a factorization. Carries the offending pivot modulus.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double pivot);
  double pivot() const noexcept { return pivot_; }

 private:
  double pivot_;
};

/// Square matrix failed the LU pivot test.
class SingularMatrixError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Gram matrix of a rectangular input failed the LU pivot test.
class RankDeficientError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A result that theory guarantees to exist could not be computed.
class InternalConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Malformed matrix file or report.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hadinv
