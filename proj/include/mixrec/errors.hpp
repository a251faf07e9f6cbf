#pragma once

#include <stdexcept>
#include <string>

namespace mixrec {

enum class ErrorKind {
  InvalidParams,
  SingularParams,
  RealnessViolation,
  ConvergenceFailure,
  DegenerateU,
  SizeMismatch,
  SharedZeroSuspected,
  MergeCollision,
  ConstraintViolation,
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SingularParams: return "SingularParams";
    case ErrorKind::RealnessViolation: return "RealnessViolation";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DegenerateU: return "DegenerateU";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SharedZeroSuspected: return "SharedZeroSuspected";
    case ErrorKind::MergeCollision: return "MergeCollision";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mixrec
