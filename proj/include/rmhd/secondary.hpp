#pragma once

#include "rmhd/symmetric.hpp"

namespace rmhd {

/// Rest-frame correction matrices (L0, L1, L2, L3); the secondary system is
/// rest_frame_primary + lambda * correction.
RestFrameSystem rest_frame_correction(const Thermo& th, const Vec3& Hprime);

/// Secondary rest-frame system for a state at rest (u must be zero, H is H').
/// Throws InvalidInput for a moving state and HyperbolicityViolation for an
/// inadmissible one. lambda itself is not window-checked.
RestFrameSystem build_rest_secondary(const PrimitiveState& rest, double lambda);

// Generalized symmetrizer of the rest-frame system: D' times the system plus
// R' div H' gives the secondary system.
struct RestSymmetrizer {
  Mat7 D = Mat7::Identity();
  Vec7 R = Vec7::Zero();
};

RestSymmetrizer build_Dprime_Rprime(const PrimitiveState& rest, double lambda);

struct SecondaryKit {
  double lambda = 0.0;
  MatrixQuadruple quadruple;
  double window_bound = 0.0;

  bool inside_window() const { return lambda * lambda < window_bound * window_bound; }
};

/// LAB-frame secondary quadruple via the boost of the rest-frame pieces.
SecondaryKit build_secondary(const PrimitiveState& U, double lambda);

/// m(U) = c_s / sqrt(rho a^2 + B^2); the family is hyperbolic iff |lambda| < m.
double window_bound(const PrimitiveState& U);
double window_bound(const DerivedState& d);

}  // namespace rmhd
