#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "rmhd/sampling.hpp"
#include "rmhd/symmetric.hpp"

namespace rmhd {

/// T^{alpha beta} = (rho h + B^2) u^a u^b + q g^{ab} - b^a b^b, g = diag(-1,1,1,1).
Mat4 stress_tensor(const PrimitiveState& U);

/// Conserved densities (rho Γ, momentum, energy, H).
Vec8 conserved(const PrimitiveState& U);

/// Flux of the conserved densities along one axis.
Vec8 flux(const PrimitiveState& U, Axis j);

struct QuasilinearJacobians {
  Mat8 B0 = Mat8::Zero();
  std::array<Mat8, 3> B{Mat8::Zero(), Mat8::Zero(), Mat8::Zero()};
};

/// dW/dU and dF_j/dU by central differences with a Richardson half-step check.
/// Throws FiniteDifferenceUnstable when the two step sizes disagree by > 1e-5.
QuasilinearJacobians quasilinear_jacobians(const PrimitiveState& U);

// Spatial derivatives (d1 U, d2 U, d3 U) of one trial.
struct DerivativeSample {
  std::array<Vec8, 3> dU{Vec8::Zero(), Vec8::Zero(), Vec8::Zero()};

  double divergence_H() const;
};

/// Uniform entries in [-1, 1], then the three diagonal dH entries are shifted by a
/// common amount so that d1 H1 + d2 H2 + d3 H3 equals `divergence`.
DerivativeSample draw_constrained_derivatives(Rng& rng, double divergence = 0.0);

/// ||A0 dtU + sum Aj djU||_inf / sum_j ||Aj||_inf ||djU||_inf, with dtU taken from
/// the conservative quasilinear form B0 dtU = -sum Bj djU.
double equivalence_residual(const MatrixQuadruple& quad, const QuasilinearJacobians& jac,
                            const DerivativeSample& sample);

struct ResidualReport {
  std::size_t trials = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::size_t failures = 0;
  std::optional<double> lambda;
};

inline constexpr double kEquivalenceTolerance = 1e-5;

/// Fixed state and quadruple, `trials` independent derivative draws from `seed`.
ResidualReport equivalence_oracle(const PrimitiveState& U, const MatrixQuadruple& quad,
                                  std::optional<double> lambda, std::uint64_t seed,
                                  std::size_t trials = 100, double divergence = 0.0);

}  // namespace rmhd
