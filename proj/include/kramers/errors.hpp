#pragma once

#include <stdexcept>
#include <string>

namespace kramers {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched or unsupported matrix dimensions (e.g. odd dimension where a
/// Kramers pairing is required).
struct DimensionError : Error {
  using Error::Error;
};

/// An input failed a structural precondition at the working tolerance.
struct StructureError : Error {
  using Error::Error;
};

struct NotQuaternionic : StructureError {
  using StructureError::StructureError;
};
struct NotSelfDual : StructureError {
  using StructureError::StructureError;
};
struct NotSymmetric : StructureError {
  using StructureError::StructureError;
};
struct NotHermitian : StructureError {
  using StructureError::StructureError;
};
struct NotNormal : StructureError {
  using StructureError::StructureError;
};
struct NotSymplectic : StructureError {
  using StructureError::StructureError;
};
struct NotCommuting : StructureError {
  using StructureError::StructureError;
};
struct NotPartialIsometry : StructureError {
  using StructureError::StructureError;
};
struct NotUnit : StructureError {
  using StructureError::StructureError;
};
struct NotOrthogonal : StructureError {
  using StructureError::StructureError;
};
struct OddKernel : StructureError {
  using StructureError::StructureError;
};
struct NotAnEigenvalue : StructureError {
  using StructureError::StructureError;
};
struct IllConditioned : StructureError {
  using StructureError::StructureError;
};

/// An iterative kernel failed to reach its residual target.
struct NoConvergence : Error {
  using Error::Error;
};

/// Malformed matrix file; `field` names the offending header field or entry.
struct ParseError : Error {
  std::string field;
  ParseError(const std::string& field_, const std::string& what_)
      : Error(what_), field(field_) {}
};

}  // namespace kramers
