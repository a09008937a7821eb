#include "rmhd/secondary.hpp"

#include <cmath>

#include "rmhd/errors.hpp"
#include "rmhd/lorentz.hpp"

namespace rmhd {
namespace {

Thermo thermo_of(const DerivedState& d) { return Thermo{d.rho, d.e, d.h, d.a2, d.cs2}; }

Mat3 rest_momentum_block(const Thermo& th, const Vec3& Hp) {
  return (th.rho * th.h + Hp.squaredNorm()) * Mat3::Identity() - Hp * Hp.transpose();
}

RestFrameSystem combine(const RestFrameSystem& base, const RestFrameSystem& corr, double lambda) {
  RestFrameSystem out;
  out.A0 = base.A0 + lambda * corr.A0;
  for (int j = 0; j < 3; ++j) out.A[j] = base.A[j] + lambda * corr.A[j];
  return out;
}

Thermo rest_thermo(const PrimitiveState& rest) {
  if (rest.u.squaredNorm() != 0.0) {
    throw Error(ErrorKind::InvalidInput, "rest-frame construction needs u = 0");
  }
  return thermo_of(require_hyperbolic(rest));
}

}  // namespace

RestFrameSystem rest_frame_correction(const Thermo& th, const Vec3& Hp) {
  const Mat3 I = Mat3::Identity();
  const Mat3 Ap = rest_momentum_block(th, Hp);
  RestFrameSystem L;
  L.A0.block<1, 3>(0, 1) = Hp.transpose() / th.cs2;
  L.A0.block<3, 1>(1, 0) = Hp / th.cs2;
  L.A0.block<3, 3>(1, 4) = -Ap;
  L.A0.block<3, 3>(4, 1) = -Ap;
  for (int j = 0; j < 3; ++j) {
    const Vec3 e = Vec3::Unit(j);
    Mat7& Lj = L.A[j];
    Lj(0, 0) = Hp(j) / (th.rho * th.a2);
    Lj.block<1, 3>(0, 4) = -e.transpose();
    Lj.block<3, 1>(4, 0) = -e;
    Lj.block<3, 3>(1, 1) = Hp(j) * Ap;
    Lj.block<3, 3>(4, 4) = Hp(j) * I - (Hp * e.transpose() + e * Hp.transpose());
  }
  return L;
}

RestFrameSystem build_rest_secondary(const PrimitiveState& rest, double lambda) {
  const Thermo th = rest_thermo(rest);
  return combine(rest_frame_primary(th, rest.H), rest_frame_correction(th, rest.H), lambda);
}

RestSymmetrizer build_Dprime_Rprime(const PrimitiveState& rest, double lambda) {
  const Thermo th = rest_thermo(rest);
  const Vec3& Hp = rest.H;
  const Mat3 I = Mat3::Identity();
  RestSymmetrizer sym;
  sym.D.block<1, 3>(0, 1) = (lambda / (th.rho * th.a2)) * Hp.transpose();
  sym.D.block<3, 1>(1, 0) = lambda * th.rho * th.h * Hp;
  sym.D.block<3, 3>(1, 4) = -lambda * rest_momentum_block(th, Hp);
  sym.D.block<3, 3>(4, 1) = -lambda * I;
  sym.R(0) = -lambda;
  sym.R.segment<3>(4) = -lambda * Hp;
  return sym;
}

SecondaryKit build_secondary(const PrimitiveState& U, double lambda) {
  if (!std::isfinite(lambda)) throw Error(ErrorKind::InvalidInput, "lambda must be finite");
  const DerivedState d = require_hyperbolic(U);
  const Thermo th = thermo_of(d);
  const Vec3 Hp = rest_frame_field(d.v, U.H);
  const RestFrameSystem rest =
      combine(rest_frame_primary(th, Hp), rest_frame_correction(th, Hp), lambda);

  SecondaryKit kit;
  kit.lambda = lambda;
  kit.quadruple = lab_from_rest(rest, d.v, U.H);
  kit.window_bound = window_bound(d);
  return kit;
}

double window_bound(const DerivedState& d) {
  return std::sqrt(d.cs2 / (d.rho * d.a2 + d.B2));
}

double window_bound(const PrimitiveState& U) { return window_bound(require_hyperbolic(U)); }

}  // namespace rmhd
