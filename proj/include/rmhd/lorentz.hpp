#pragma once

#include "rmhd/linalg.hpp"

namespace rmhd {

// Pure boost along v, plus the blocks of the perturbation transform
// dV' = J dV that carries LAB perturbations (dp, du, dH) to the fluid rest frame.
struct BoostKit {
  double lorentz = 1.0;
  Mat4 L = Mat4::Identity();
  Mat4 Linv = Mat4::Identity();
  Mat3 J1 = Mat3::Identity();
  Mat3 J2 = Mat3::Identity();
  Mat3 J3 = Mat3::Zero();
  Vec3 Hprime = Vec3::Zero();  // rest-frame magnetic field
};

/// (Γ - 1) / |v|², written as Γ² / (Γ + 1) so it stays finite at v = 0.
inline double boost_coefficient(double lorentz) { return lorentz * lorentz / (lorentz + 1.0); }

/// Γ = (1 - |v|²)^(-1/2); throws SuperluminalVelocity for |v| >= 1.
double lorentz_factor(const Vec3& v);

/// Throws SuperluminalVelocity for |v| >= 1.
BoostKit build_boost(const Vec3& v, const Vec3& H);

/// Magnetic field seen in the fluid rest frame.
Vec3 rest_frame_field(const Vec3& v, const Vec3& H);

/// 7x7 transform J = [[1,0,0],[0,J1,0],[0,J3,J2]].
Mat7 assemble_J(const BoostKit& kit);
Mat7 build_J(const Vec3& v, const Vec3& H);

}  // namespace rmhd
