#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>

namespace rmhd {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat7 = Eigen::Matrix<double, 7, 7>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

// Spatial axis of the LAB frame. Matrices and fluxes are indexed by axis,
// the sheet normal is always Axis::x.
enum class Axis : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

constexpr int index(Axis a) noexcept { return static_cast<int>(a); }

inline Vec3 unit(Axis a) { return Vec3::Unit(index(a)); }

// Row/column layout of the 8-vector U = (p, u, H, S).
namespace slot {
inline constexpr int p = 0;
inline constexpr int u = 1;
inline constexpr int H = 4;
inline constexpr int S = 7;
}  // namespace slot

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// ||A - A^T||_max / ||A||_max, zero for the zero matrix.
template <typename Derived>
double symmetry_defect(const Eigen::MatrixBase<Derived>& m) {
  const double scale = max_abs(m);
  if (scale == 0.0) return 0.0;
  return max_abs(m - m.transpose()) / scale;
}

/// Ascending eigenvalues of the symmetric part of a square matrix.
template <typename Derived>
auto symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  const Plain sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Plain> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().eval();
}

template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  return symmetric_eigenvalues(m)(0);
}

// 2D cross product a ∧ b.
inline double wedge(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace rmhd
