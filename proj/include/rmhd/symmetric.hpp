#pragma once

#include <array>

#include "rmhd/eos.hpp"
#include "rmhd/linalg.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

// Coefficient matrices of A0 dU/dt + sum_j Aj dU/dx^j = 0, rows and columns
// ordered (p, u1, u2, u3, H1, H2, H3, S).
struct MatrixQuadruple {
  Mat8 A0 = Mat8::Zero();
  std::array<Mat8, 3> A{Mat8::Zero(), Mat8::Zero(), Mat8::Zero()};

  const Mat8& spatial(Axis a) const { return A[index(a)]; }
  /// sum_j n_j Aj
  Mat8 along(const Vec3& n) const { return n.x() * A[0] + n.y() * A[1] + n.z() * A[2]; }
};

// 7x7 rest-frame system acting on dV' = (dp', du', dH').
struct RestFrameSystem {
  Mat7 A0 = Mat7::Zero();
  std::array<Mat7, 3> A{Mat7::Zero(), Mat7::Zero(), Mat7::Zero()};
};

/// The rest-frame symmetric system for fluid at rest with field Hprime.
RestFrameSystem rest_frame_primary(const Thermo& th, const Vec3& Hprime);

/// Carries a rest-frame system to the LAB frame through the Lorentz transform
/// and pads the entropy row/column (1 in A0, v_j in Aj).
MatrixQuadruple lab_from_rest(const RestFrameSystem& rest, const Vec3& v, const Vec3& H);

/// Direct dyadic assembly. All throw HyperbolicityViolation for inadmissible U.
Mat8 build_A0(const PrimitiveState& U);
Mat8 build_Aj(const PrimitiveState& U, Axis j);
/// Aj - v_j A0, assembled from its own dyadic blocks.
Mat8 build_Gj(const PrimitiveState& U, Axis j);
MatrixQuadruple build_primary(const PrimitiveState& U);

/// Same quadruple built through the rest frame and the boost.
MatrixQuadruple build_via_boost(const PrimitiveState& U);

Mat8 pad_entropy(const Mat7& m, double entropy_entry);

}  // namespace rmhd
