#pragma once

#include <stdexcept>
#include <string>

namespace rmhd {

enum class ErrorKind {
  InvalidInput,
  NonPositivePressure,
  CausalityViolation,
  HyperbolicityViolation,
  SuperluminalVelocity,
  NotASheetSide,
  DegenerateTangentialFields,
  ZeroTangentialField,
  SingularMap,
  WindowViolation,
  FiniteDifferenceUnstable,
};

const char* to_string(ErrorKind kind) noexcept;

/// Short %g rendering for error messages.
std::string describe(double x);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rmhd
