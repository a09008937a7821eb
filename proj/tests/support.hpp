#pragma once

// Independent reference formulas and samplers shared by the unit and
// acceptance tests. Nothing here calls into the assembly code it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "rmhd/cvs.hpp"
#include "rmhd/linalg.hpp"
#include "rmhd/sampling.hpp"
#include "rmhd/state.hpp"

namespace rmhd::test {

/// max |a - b| / max |a|, zero when both vanish.
template <typename A, typename B>
double relative_deviation(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const double scale = std::max(max_abs(a), max_abs(b));
  return scale == 0.0 ? 0.0 : max_abs(a - b) / scale;
}

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Hand-evaluated ideal-gas thermodynamics for p = exp(S) rho^gamma.
struct GasPoint {
  double rho, e, h, a2, cs2;
};

inline GasPoint gas_point(double gamma, double p, double S) {
  const double rho = std::pow(p * std::exp(-S), 1.0 / gamma);
  const double e = p / ((gamma - 1.0) * rho);
  const double h = 1.0 + e + p / rho;
  const double a2 = gamma * p / rho;
  return {rho, e, h, a2, a2 / h};
}

// Relativistic Euler matrices for W = (p, u, S), written out from the
// nonconservative gas-dynamics equations. Indices 0..4 map to (p, u1, u2, u3, S).
struct EulerMatrices {
  Eigen::Matrix<double, 5, 5> B0;
  std::array<Eigen::Matrix<double, 5, 5>, 3> B;
};

inline EulerMatrices euler_matrices(double gamma, double p, const Vec3& u, double S) {
  const GasPoint g = gas_point(gamma, p, S);
  const double lorentz = std::sqrt(1.0 + u.squaredNorm());
  const Vec3 v = u / lorentz;
  const Mat3 Bm = Mat3::Identity() - v * v.transpose();
  const double rho_a2 = g.rho * g.a2;
  const double rho_h = g.rho * g.h;

  EulerMatrices m;
  m.B0.setZero();
  m.B0(0, 0) = lorentz / rho_a2;
  m.B0.block<1, 3>(0, 1) = v.transpose();
  m.B0.block<3, 1>(1, 0) = v;
  m.B0.block<3, 3>(1, 1) = rho_h * lorentz * Bm;
  m.B0(4, 4) = 1.0;
  for (int j = 0; j < 3; ++j) {
    auto& Bj = m.B[j];
    Bj.setZero();
    Bj(0, 0) = u(j) / rho_a2;
    Bj(0, 1 + j) = 1.0;
    Bj(1 + j, 0) = 1.0;
    Bj.block<3, 3>(1, 1) = rho_h * u(j) * Bm;
    Bj(4, 4) = v(j);
  }
  return m;
}

/// Rows/columns (p, u1, u2, u3, S) of an 8x8 matrix.
inline Eigen::Matrix<double, 5, 5> euler_minor(const Mat8& A) {
  constexpr std::array<int, 5> keep{0, 1, 2, 3, 7};
  Eigen::Matrix<double, 5, 5> out;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) out(r, c) = A(keep[r], keep[c]);
  return out;
}

// Series form of (Γ - 1)/|v|², used only for the small-velocity comparison.
inline double boost_coefficient_series(double v2) {
  return 0.5 + 3.0 / 8.0 * v2 + 5.0 / 16.0 * v2 * v2;
}

struct JBlocks {
  Mat3 J1, J2, J3;
};

inline JBlocks taylor_J(const Vec3& v, const Vec3& H) {
  const double v2 = v.squaredNorm();
  const double lorentz = 1.0 / std::sqrt(1.0 - v2);
  const double c = boost_coefficient_series(v2);
  const Mat3 I = Mat3::Identity();
  const Mat3 vv = v * v.transpose();
  const double vH = v.dot(H);
  return {I - (c / lorentz) * vv, (I + c * vv) / lorentz,
          -H * v.transpose() / (lorentz * lorentz) + vH * I - vH * vv};
}

// Non-relativistic current-vortex sheet criterion. Angles come from atan2 so
// that this path shares no arithmetic with the dot/wedge implementation.
struct ClassicalSide {
  double rho, a2;
  Vec2 v, H;
};

inline double classical_margin(const ClassicalSide& plus, const ClassicalSide& minus) {
  const auto gamma = [](const ClassicalSide& s) {
    const double a = std::sqrt(s.a2);
    return s.H.norm() * a / std::sqrt(s.rho * s.a2 + s.H.squaredNorm());
  };
  const Vec2 jump = plus.v - minus.v;
  const double angle_jump = std::atan2(jump.y(), jump.x());
  const double phi_p = std::atan2(plus.H.y(), plus.H.x()) - angle_jump;
  const double phi_m = std::atan2(minus.H.y(), minus.H.x()) - angle_jump;
  const double sd = std::abs(std::sin(phi_p - phi_m));
  return sd * std::min(gamma(plus) / std::abs(std::sin(phi_m)),
                       gamma(minus) / std::abs(std::sin(phi_p))) -
         jump.norm();
}

/// Tangential side with prescribed 2D velocity and field, and thermodynamics given by (rho, p/rho).
inline PrimitiveState sheet_state(double gamma, double rho, double theta, const Vec2& vt,
                                  const Vec2& Ht) {
  const double p = rho * theta;
  const double S = std::log(p / std::pow(rho, gamma));
  return PrimitiveState::from_velocity(p, Vec3(0.0, vt.x(), vt.y()), Vec3(0.0, Ht.x(), Ht.y()), S,
                                       EosModel{gamma});
}

/// Random sheet pair whose tangential fields are at least `min_sin` from parallel.
inline std::pair<SheetSide, SheetSide> random_sheet_pair(Rng& rng, const StateSampling& s = {},
                                                         double min_sin = 0.05) {
  for (;;) {
    SheetSide plus = SheetSide::make(random_sheet_state(rng, s));
    SheetSide minus = SheetSide::make(random_sheet_state(rng, s));
    const double sin_delta =
        std::abs(wedge(plus.H_tan(), minus.H_tan())) / (plus.H_tan().norm() * minus.H_tan().norm());
    if (sin_delta >= min_sin) return {plus, minus};
  }
}

/// Moves the plus-side tangential velocity so that [v_tan] = jump.
inline SheetSide with_jump(const SheetSide& plus, const SheetSide& minus, const Vec2& jump) {
  const Vec2 vt = minus.v_tan() + jump;
  const PrimitiveState& U = plus.state;
  return SheetSide::make(
      PrimitiveState::from_velocity(U.p, Vec3(0.0, vt.x(), vt.y()), U.H, U.S, U.eos));
}

}  // namespace rmhd::test
