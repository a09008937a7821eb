#include "rmhd/conservative.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmhd/errors.hpp"

namespace rmhd {
namespace {

// W followed by F1, F2, F3, sharing one derive().
std::array<Vec8, 4> densities_and_fluxes(const PrimitiveState& U) {
  const DerivedState d = require_hyperbolic(U);
  const double rh = d.rho * d.h;
  const double H2 = U.H.squaredNorm();
  const double vH = d.v.dot(U.H);
  const Vec3 momentum = rh * d.lorentz * U.u + H2 * d.v - vH * U.H;

  std::array<Vec8, 4> out;
  Vec8& W = out[0];
  W(0) = d.rho * d.lorentz;
  W.segment<3>(1) = momentum;
  W(4) = rh * d.lorentz * d.lorentz + H2 - d.q;
  W.segment<3>(5) = U.H;

  for (int j = 0; j < 3; ++j) {
    Vec8& F = out[j + 1];
    F(0) = d.rho * U.u(j);
    F.segment<3>(1) = (rh + d.B2) * U.u(j) * U.u - d.b(j) * d.b;
    F(1 + j) += d.q;
    F(4) = momentum(j);
    F.segment<3>(5) = d.v(j) * U.H - U.H(j) * d.v;
  }
  return out;
}

double matrix_inf_norm(const Mat8& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

using JacobianSet = std::array<Mat8, 4>;

JacobianSet central_differences(const PrimitiveState& U, double step_scale) {
  JacobianSet J;
  const Vec8 base = U.as_vector();
  for (int k = 0; k < 8; ++k) {
    double step = step_scale * std::max(1.0, std::abs(base(k)));
    // keep the pressure stencil inside p > 0
    if (k == slot::p) step = std::min(step, 1e-3 * base(k));
    Vec8 up = base;
    Vec8 down = base;
    up(k) += step;
    down(k) -= step;
    // divide by the stencil width actually realized in floating point
    const double width = up(k) - down(k);
    const auto fu = densities_and_fluxes(PrimitiveState::from_vector(up, U.eos));
    const auto fd = densities_and_fluxes(PrimitiveState::from_vector(down, U.eos));
    for (int a = 0; a < 4; ++a) J[a].col(k) = (fu[a] - fd[a]) / width;
  }
  return J;
}

}  // namespace

Mat4 stress_tensor(const PrimitiveState& U) {
  const DerivedState d = require_hyperbolic(U);
  Vec4 u4;
  u4 << d.lorentz, U.u;
  Vec4 b4;
  b4 << d.b0, d.b;
  const Mat4 g = Vec4(-1.0, 1.0, 1.0, 1.0).asDiagonal();
  return (d.rho * d.h + d.B2) * u4 * u4.transpose() + d.q * g - b4 * b4.transpose();
}

Vec8 conserved(const PrimitiveState& U) { return densities_and_fluxes(U)[0]; }

Vec8 flux(const PrimitiveState& U, Axis j) { return densities_and_fluxes(U)[index(j) + 1]; }

QuasilinearJacobians quasilinear_jacobians(const PrimitiveState& U) {
  require_hyperbolic(U);
  const JacobianSet coarse = central_differences(U, 1e-6);
  const JacobianSet fine = central_differences(U, 0.5e-6);

  QuasilinearJacobians out;
  for (int a = 0; a < 4; ++a) {
    const double scale = max_abs(fine[a]);
    const double gap = max_abs(coarse[a] - fine[a]);
    if (gap > 1e-5 * scale) {
      throw Error(ErrorKind::FiniteDifferenceUnstable,
                  "half-step Jacobian disagreement " + describe(gap / scale));
    }
    const Mat8 extrapolated = (4.0 * fine[a] - coarse[a]) / 3.0;
    if (a == 0) {
      out.B0 = extrapolated;
    } else {
      out.B[a - 1] = extrapolated;
    }
  }
  return out;
}

double DerivativeSample::divergence_H() const {
  return dU[0](slot::H) + dU[1](slot::H + 1) + dU[2](slot::H + 2);
}

DerivativeSample draw_constrained_derivatives(Rng& rng, double divergence) {
  DerivativeSample s;
  for (auto& d : s.dU) {
    for (int k = 0; k < 8; ++k) d(k) = rng.uniform(-1.0, 1.0);
  }
  const double shift = (s.divergence_H() - divergence) / 3.0;
  for (int j = 0; j < 3; ++j) s.dU[j](slot::H + j) -= shift;
  return s;
}

double equivalence_residual(const MatrixQuadruple& quad, const QuasilinearJacobians& jac,
                            const DerivativeSample& sample) {
  Vec8 rhs = Vec8::Zero();
  for (int j = 0; j < 3; ++j) rhs += jac.B[j] * sample.dU[j];
  const Vec8 dt = -jac.B0.partialPivLu().solve(rhs);

  Vec8 r = quad.A0 * dt;
  double scale = 0.0;
  for (int j = 0; j < 3; ++j) {
    r += quad.A[j] * sample.dU[j];
    scale += matrix_inf_norm(quad.A[j]) * max_abs(sample.dU[j]);
  }
  if (scale == 0.0) return 0.0;
  return max_abs(r) / scale;
}

ResidualReport equivalence_oracle(const PrimitiveState& U, const MatrixQuadruple& quad,
                                  std::optional<double> lambda, std::uint64_t seed,
                                  std::size_t trials, double divergence) {
  const QuasilinearJacobians jac = quasilinear_jacobians(U);
  Rng rng(seed);
  ResidualReport report;
  report.lambda = lambda;
  report.trials = trials;
  double sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double r = equivalence_residual(quad, jac, draw_constrained_derivatives(rng, divergence));
    report.max_residual = std::max(report.max_residual, r);
    sum += r;
    if (!(r <= kEquivalenceTolerance)) ++report.failures;
  }
  if (trials > 0) report.mean_residual = sum / static_cast<double>(trials);
  return report;
}

}  // namespace rmhd
