#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace contact_index {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed exact text (rationals, scalars, torsion points).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The moment pairing vanishes where a delta must be pulled back.
class EllipticityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A normal direction is fixed by the group element.
class FixedSetMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A jet is not long enough to pair with the delta derivatives it meets.
class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Invalid model document or configuration; carries the offending field path.
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Sampled coefficients do not follow a quasi-polynomial of the expected shape.
class FitError : public Error {
 public:
  using Error::Error;
};

/// Zero or several convention combinations reproduce the calibration anchors.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace contact_index
