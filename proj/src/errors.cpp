#include "rmhd/errors.hpp"

#include <cstdio>

namespace rmhd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonPositivePressure: return "NonPositivePressure";
    case ErrorKind::CausalityViolation: return "CausalityViolation";
    case ErrorKind::HyperbolicityViolation: return "HyperbolicityViolation";
    case ErrorKind::SuperluminalVelocity: return "SuperluminalVelocity";
    case ErrorKind::NotASheetSide: return "NotASheetSide";
    case ErrorKind::DegenerateTangentialFields: return "DegenerateTangentialFields";
    case ErrorKind::ZeroTangentialField: return "ZeroTangentialField";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::WindowViolation: return "WindowViolation";
    case ErrorKind::FiniteDifferenceUnstable: return "FiniteDifferenceUnstable";
  }
  return "Unknown";
}

std::string describe(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace rmhd
