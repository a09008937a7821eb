#pragma once

#include <string>

#include "rmhd/eos.hpp"
#include "rmhd/linalg.hpp"

namespace rmhd {

// Primitive unknowns U = (p, u, H, S). The spatial 4-velocity u is unbounded,
// so |v| < 1 holds for every finite state.
struct PrimitiveState {
  double p = 1.0;
  Vec3 u = Vec3::Zero();
  Vec3 H = Vec3::Zero();
  double S = 0.0;
  EosModel eos{};

  /// Builds a state from the 3-velocity; throws SuperluminalVelocity for |v| >= 1.
  static PrimitiveState from_velocity(double p, const Vec3& v, const Vec3& H, double S,
                                      const EosModel& eos);
  static PrimitiveState from_vector(const Vec8& U, const EosModel& eos);

  Vec8 as_vector() const;
};

struct DerivedState {
  double lorentz = 1.0;  // Γ
  Vec3 v = Vec3::Zero();
  double b0 = 0.0;
  Vec3 b = Vec3::Zero();
  double B2 = 0.0;
  double rho = 0.0;
  double e = 0.0;
  double h = 0.0;
  double a2 = 0.0;
  double cs2 = 0.0;
  double q = 0.0;  // total pressure p + B2/2

  double vH(const Vec3& H) const { return v.dot(H); }
};

/// Derived relativistic quantities. Propagates EOS errors.
DerivedState derive(const PrimitiveState& U);

struct AdmissibilityReport {
  bool density_positive = false;
  bool sound_speed_real = false;  // a2 > 0
  bool causal = false;            // 0 < cs2 < 1
  bool subluminal = false;        // |v| < 1
  std::string failure;            // first failed condition, empty when ok

  bool ok() const { return density_positive && sound_speed_real && causal && subluminal; }
};

AdmissibilityReport check_hyperbolic(const PrimitiveState& U);

/// derive() guarded by check_hyperbolic(); throws HyperbolicityViolation.
DerivedState require_hyperbolic(const PrimitiveState& U);

}  // namespace rmhd
