#include "rmhd/state.hpp"

#include <cmath>

#include "rmhd/errors.hpp"
#include "rmhd/lorentz.hpp"

namespace rmhd {

PrimitiveState PrimitiveState::from_velocity(double p, const Vec3& v, const Vec3& H, double S,
                                             const EosModel& eos) {
  const double lorentz = lorentz_factor(v);
  return PrimitiveState{p, lorentz * v, H, S, eos};
}

PrimitiveState PrimitiveState::from_vector(const Vec8& U, const EosModel& eos) {
  return PrimitiveState{U(slot::p), U.segment<3>(slot::u), U.segment<3>(slot::H), U(slot::S),
                        eos};
}

Vec8 PrimitiveState::as_vector() const {
  Vec8 U;
  U << p, u, H, S;
  return U;
}

DerivedState derive(const PrimitiveState& U) {
  const Thermo th = thermo(U.eos, U.p, U.S);
  DerivedState d;
  d.lorentz = std::sqrt(1.0 + U.u.squaredNorm());
  d.v = U.u / d.lorentz;
  d.b0 = U.u.dot(U.H);
  d.b = U.H / d.lorentz + d.b0 * d.v;
  const double vH = d.v.dot(U.H);
  d.B2 = U.H.squaredNorm() / (d.lorentz * d.lorentz) + vH * vH;
  d.rho = th.rho;
  d.e = th.e;
  d.h = th.h;
  d.a2 = th.a2;
  d.cs2 = th.cs2;
  d.q = U.p + 0.5 * d.B2;
  return d;
}

AdmissibilityReport check_hyperbolic(const PrimitiveState& U) {
  AdmissibilityReport r;
  if (!U.u.allFinite() || !U.H.allFinite()) {
    r.failure = "non-finite velocity or field";
    return r;
  }
  const double lorentz = std::sqrt(1.0 + U.u.squaredNorm());
  r.subluminal = (U.u / lorentz).squaredNorm() < 1.0 && std::isfinite(lorentz);
  Thermo th;
  try {
    th = thermo_unchecked(U.eos, U.p, U.S);
  } catch (const Error& e) {
    r.failure = e.what();
    return r;
  }
  r.density_positive = th.rho > 0.0 && std::isfinite(th.rho);
  r.sound_speed_real = th.a2 > 0.0;
  r.causal = th.cs2 > 0.0 && th.cs2 < 1.0;
  if (!r.density_positive) {
    r.failure = "density is not positive";
  } else if (!r.sound_speed_real) {
    r.failure = "a^2 is not positive";
  } else if (!r.causal) {
    r.failure = "sound speed squared outside (0, 1)";
  } else if (!r.subluminal) {
    r.failure = "|v| is not below 1";
  }
  return r;
}

DerivedState require_hyperbolic(const PrimitiveState& U) {
  const AdmissibilityReport r = check_hyperbolic(U);
  if (!r.ok()) {
    throw Error(ErrorKind::HyperbolicityViolation, "inadmissible state: " + r.failure);
  }
  return derive(U);
}

}  // namespace rmhd
