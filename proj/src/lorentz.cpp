#include "rmhd/lorentz.hpp"

#include <cmath>
#include <string>

#include "rmhd/errors.hpp"

namespace rmhd {

double lorentz_factor(const Vec3& v) {
  const double v2 = v.squaredNorm();
  if (!(v2 < 1.0)) {
    throw Error(ErrorKind::SuperluminalVelocity,
                "|v| = " + describe(std::sqrt(v2)) + " is not below 1");
  }
  return 1.0 / std::sqrt(1.0 - v2);
}

Vec3 rest_frame_field(const Vec3& v, const Vec3& H) {
  const double lorentz = lorentz_factor(v);
  return H / lorentz + boost_coefficient(lorentz) / lorentz * v.dot(H) * v;
}

BoostKit build_boost(const Vec3& v, const Vec3& H) {
  BoostKit kit;
  const double g = lorentz_factor(v);
  const double c = boost_coefficient(g);
  const Mat3 I = Mat3::Identity();
  const Mat3 vv = v * v.transpose();
  const double vH = v.dot(H);
  kit.lorentz = g;

  const Mat3 spatial = I + c * vv;
  kit.L(0, 0) = g;
  kit.L.block<1, 3>(0, 1) = -g * v.transpose();
  kit.L.block<3, 1>(1, 0) = -g * v;
  kit.L.block<3, 3>(1, 1) = spatial;
  kit.Linv = kit.L;
  kit.Linv.block<1, 3>(0, 1) *= -1.0;
  kit.Linv.block<3, 1>(1, 0) *= -1.0;

  kit.J1 = I - (c / g) * vv;
  kit.J2 = spatial / g;
  kit.J3 = -(1.0 / (g * g)) * H * v.transpose() + vH * I - vH * vv;
  kit.Hprime = H / g + (c / g) * vH * v;
  return kit;
}

Mat7 assemble_J(const BoostKit& kit) {
  Mat7 J = Mat7::Zero();
  J(0, 0) = 1.0;
  J.block<3, 3>(1, 1) = kit.J1;
  J.block<3, 3>(4, 1) = kit.J3;
  J.block<3, 3>(4, 4) = kit.J2;
  return J;
}

Mat7 build_J(const Vec3& v, const Vec3& H) { return assemble_J(build_boost(v, H)); }

}  // namespace rmhd
