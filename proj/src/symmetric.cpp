#include "rmhd/symmetric.hpp"

#include "rmhd/lorentz.hpp"

namespace rmhd {
namespace {

Thermo thermo_of(const DerivedState& d) { return Thermo{d.rho, d.e, d.h, d.a2, d.cs2}; }

Mat3 dyad(const Vec3& a, const Vec3& b) { return a * b.transpose(); }

// Velocity-velocity block of A0.
Mat3 momentum_block(const DerivedState& d, const Vec3& H) {
  const Mat3 I = Mat3::Identity();
  const double g = d.lorentz;
  const double rhg = d.rho * d.h * g;
  const double H2 = H.squaredNorm();
  const double vH = d.v.dot(H);
  return (rhg + H2 / g) * I - (rhg + (H2 + d.B2) / g) * dyad(d.v, d.v) - dyad(H, H) / g +
         (vH / g) * (dyad(d.v, H) + dyad(H, d.v));
}

// Field-field block of A0: (I + u u^T) / Γ.
Mat3 field_block(const DerivedState& d, const Vec3& u) {
  return (Mat3::Identity() + dyad(u, u)) / d.lorentz;
}

// Field-velocity coupling of Aj.
Mat3 coupling_block(const DerivedState& d, const Vec3& H, int j) {
  const double g = d.lorentz;
  const Vec3 e = Vec3::Unit(j);
  return dyad(d.b, e) / g - (d.v(j) / g) * dyad(d.b, d.v) - (H(j) / (g * g)) * Mat3::Identity();
}

// Terms of the velocity-velocity block of Aj that do not scale with v_j A0.
Mat3 shear_terms(const DerivedState& d, const Vec3& H, int j) {
  const Mat3 I = Mat3::Identity();
  const double g = d.lorentz;
  const double vH = d.v.dot(H);
  const Vec3 e = Vec3::Unit(j);
  const Mat3 vv = dyad(d.v, d.v);
  return (H(j) / g) * ((dyad(d.v, H) + dyad(H, d.v)) / (g * g) - 2.0 * vH * (I - vv)) +
         (vH / g) * (dyad(H, e) + dyad(e, H)) - (d.B2 / g) * (dyad(d.v, e) + dyad(e, d.v));
}

Mat8 assemble_A0(const DerivedState& d, const PrimitiveState& U) {
  Mat8 A0 = Mat8::Zero();
  A0(slot::p, slot::p) = d.lorentz / (d.rho * d.a2);
  A0.block<1, 3>(slot::p, slot::u) = d.v.transpose();
  A0.block<3, 1>(slot::u, slot::p) = d.v;
  A0.block<3, 3>(slot::u, slot::u) = momentum_block(d, U.H);
  A0.block<3, 3>(slot::H, slot::H) = field_block(d, U.u);
  A0(slot::S, slot::S) = 1.0;
  return A0;
}

Mat8 assemble_Aj(const DerivedState& d, const PrimitiveState& U, int j) {
  const Mat3 I = Mat3::Identity();
  const double g = d.lorentz;
  const double rhg = d.rho * d.h * g;
  const double H2 = U.H.squaredNorm();
  const Vec3 e = Vec3::Unit(j);
  const Mat3 vv = dyad(d.v, d.v);

  Mat8 A = Mat8::Zero();
  A(slot::p, slot::p) = U.u(j) / (d.rho * d.a2);
  A.block<1, 3>(slot::p, slot::u) = e.transpose();
  A.block<3, 1>(slot::u, slot::p) = e;
  A.block<3, 3>(slot::u, slot::u) =
      d.v(j) * ((rhg + H2 / g) * I - (rhg + (H2 - d.B2) / g) * vv - dyad(U.H, U.H) / g) +
      shear_terms(d, U.H, j);
  const Mat3 N = coupling_block(d, U.H, j);
  A.block<3, 3>(slot::H, slot::u) = N;
  A.block<3, 3>(slot::u, slot::H) = N.transpose();
  A.block<3, 3>(slot::H, slot::H) = d.v(j) * field_block(d, U.u);
  A(slot::S, slot::S) = d.v(j);
  return A;
}

}  // namespace

Mat8 pad_entropy(const Mat7& m, double entropy_entry) {
  Mat8 out = Mat8::Zero();
  out.topLeftCorner<7, 7>() = m;
  out(slot::S, slot::S) = entropy_entry;
  return out;
}

RestFrameSystem rest_frame_primary(const Thermo& th, const Vec3& Hp) {
  const Mat3 I = Mat3::Identity();
  RestFrameSystem sys;
  sys.A0(0, 0) = 1.0 / (th.rho * th.a2);
  sys.A0.block<3, 3>(1, 1) = (th.rho * th.h + Hp.squaredNorm()) * I - dyad(Hp, Hp);
  sys.A0.block<3, 3>(4, 4) = I;
  for (int j = 0; j < 3; ++j) {
    const Vec3 e = Vec3::Unit(j);
    const Mat3 K = -Hp(j) * I + dyad(Hp, e);
    Mat7& A = sys.A[j];
    A.block<1, 3>(0, 1) = e.transpose();
    A.block<3, 1>(1, 0) = e;
    A.block<3, 3>(4, 1) = K;
    A.block<3, 3>(1, 4) = K.transpose();
  }
  return sys;
}

MatrixQuadruple lab_from_rest(const RestFrameSystem& rest, const Vec3& v, const Vec3& H) {
  const Mat7 J = build_J(v, H);
  const double g = lorentz_factor(v);
  const double c = boost_coefficient(g);
  const Mat7 G = v.x() * rest.A[0] + v.y() * rest.A[1] + v.z() * rest.A[2];

  MatrixQuadruple quad;
  quad.A0 = pad_entropy(J.transpose() * (g * (rest.A0 + G)) * J, 1.0);
  for (int j = 0; j < 3; ++j) {
    const Mat7 C = g * v(j) * rest.A0 + rest.A[j] + c * v(j) * G;
    quad.A[j] = pad_entropy(J.transpose() * C * J, v(j));
  }
  return quad;
}

Mat8 build_A0(const PrimitiveState& U) { return assemble_A0(require_hyperbolic(U), U); }

Mat8 build_Aj(const PrimitiveState& U, Axis j) {
  return assemble_Aj(require_hyperbolic(U), U, index(j));
}

Mat8 build_Gj(const PrimitiveState& U, Axis axis) {
  const DerivedState d = require_hyperbolic(U);
  const int j = index(axis);
  const double g = d.lorentz;
  const Vec3 e = Vec3::Unit(j);
  const double vH = d.v.dot(U.H);

  Mat8 G = Mat8::Zero();
  const Vec3 top = e - d.v(j) * d.v;
  G.block<1, 3>(slot::p, slot::u) = top.transpose();
  G.block<3, 1>(slot::u, slot::p) = top;
  G.block<3, 3>(slot::u, slot::u) =
      d.v(j) * (2.0 * (d.B2 / g) * dyad(d.v, d.v) - (vH / g) * (dyad(d.v, U.H) + dyad(U.H, d.v))) +
      shear_terms(d, U.H, j);
  const Mat3 N = coupling_block(d, U.H, j);
  G.block<3, 3>(slot::H, slot::u) = N;
  G.block<3, 3>(slot::u, slot::H) = N.transpose();
  return G;
}

MatrixQuadruple build_primary(const PrimitiveState& U) {
  const DerivedState d = require_hyperbolic(U);
  MatrixQuadruple quad;
  quad.A0 = assemble_A0(d, U);
  for (int j = 0; j < 3; ++j) quad.A[j] = assemble_Aj(d, U, j);
  return quad;
}

MatrixQuadruple build_via_boost(const PrimitiveState& U) {
  const DerivedState d = require_hyperbolic(U);
  const Vec3 Hp = rest_frame_field(d.v, U.H);
  return lab_from_rest(rest_frame_primary(thermo_of(d), Hp), d.v, U.H);
}

}  // namespace rmhd
