#pragma once

#include <stdexcept>
#include <string>

namespace torsorkit {

/// Failure categories surfaced by the library. Usage/Parse/Validation are
/// caller errors; the remaining kinds flag mathematically inconsistent input
/// (data that violates the preconditions a construction relies on).
enum class ErrorKind {
  Usage,
  Parse,
  Validation,
  ClosureFailure,
  MembershipFailure,
  CounitNotScalar,
  AntipodeMissing,
  GaloisFailure,
  CoinvariantMismatch,
  Inconsistency,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::MembershipFailure: return "MembershipFailure";
    case ErrorKind::CounitNotScalar: return "CounitNotScalar";
    case ErrorKind::AntipodeMissing: return "AntipodeMissing";
    case ErrorKind::GaloisFailure: return "GaloisFailure";
    case ErrorKind::CoinvariantMismatch: return "CoinvariantMismatch";
    case ErrorKind::Inconsistency: return "Inconsistency";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace torsorkit
