#pragma once

#include <utility>

#include "rmhd/sampling.hpp"
#include "rmhd/secondary.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

// One side of a planar current-vortex sheet with normal e1: v1 = H1 = 0.
struct SheetSide {
  PrimitiveState state;
  DerivedState derived;

  /// Throws NotASheetSide if |v1| or |H1| exceeds `tol`, HyperbolicityViolation
  /// for an inadmissible state.
  static SheetSide make(const PrimitiveState& U, double tol = 1e-12);

  Vec2 v_tan() const { return derived.v.tail<2>(); }
  Vec2 H_tan() const { return state.H.tail<2>(); }
  double vH() const { return derived.v.dot(state.H); }
  double lorentz() const { return derived.lorentz; }
};

struct SheetOptions {
  double epsilon = 1e-12;  // lower bound on |H2+ H3- - H3+ H2-|
};

struct SidePair {
  double plus = 0.0;
  double minus = 0.0;
};

/// Solves [v_tan] = lt+ H_tan+ - lt- H_tan- by Cramer's rule.
/// Throws DegenerateTangentialFields when the determinant is below epsilon.
SidePair solve_lambda_tilde(const SheetSide& plus, const SheetSide& minus,
                            const SheetOptions& opts = {});

/// gamma = |H_tan| c_s (1 - |v|^2) / (sqrt(rho a^2 + B^2) + c_s |(v,H)|)
double gamma_factor(const SheetSide& side);

/// Bound on |lambda_tilde| that keeps lambda inside the hyperbolicity window:
/// (1/Γ²) / (1/m + |(v,H)|).
double tangential_bound(const SheetSide& side);

/// lambda_tilde = lambda / (Γ² (1 - lambda (v,H))). Throws SingularMap.
double lambda_tilde_from_lambda(const SheetSide& side, double lambda);

/// Inverse map lambda = Γ² lt / (1 + Γ² lt (v,H)). Throws SingularMap when the
/// denominator is below 1e-12 in magnitude.
double lambda_from_tilde(const SheetSide& side, double lambda_tilde);

// Angles of H_tan± against the velocity jump, from normalized dot and wedge
// products. The phi± entries are NaN when the jump vanishes.
struct SheetAngles {
  double cos_plus = 0.0;
  double sin_plus = 0.0;
  double cos_minus = 0.0;
  double sin_minus = 0.0;
  double sin_delta = 0.0;  // sin(phi+ - phi-)
};

struct StabilityReport {
  double G = 0.0;
  double det_tangential = 0.0;
  double jump = 0.0;  // |[v_tan]|
  SidePair gamma;
  SidePair lambda_tilde;
  SidePair lambda;  // NaN on a side where the map is singular
  SidePair bounds;  // tangential_bound per side
  SheetAngles angles;
  bool nondegenerate = false;
  bool stable = false;
  bool windows_ok = false;
};

/// Throws ZeroTangentialField or DegenerateTangentialFields.
StabilityReport stability_margin(const SheetSide& plus, const SheetSide& minus,
                                 const SheetOptions& opts = {});

/// Linearized total pressure dp + d(B^2)/2 of a perturbation about the side state.
double total_pressure_perturbation(const SheetSide& side, const Vec8& dU);

struct BoundaryForm {
  double quadratic = 0.0;    // (A1 dU, dU) with the secondary A1
  double closed_form = 0.0;  // 2 Γ q ((1 - lambda (v,H)) dv1 - lambda/Γ² dH1)
};

/// Throws WindowViolation unless |lambda| < m.
BoundaryForm boundary_form(const SheetSide& side, double lambda, const Vec8& dU);

// Front motion shared by both sides of the linearized problem.
struct FrontPerturbation {
  double phi_t = 0.0;
  Vec2 grad_phi = Vec2::Zero();
  double q = 0.0;  // common total-pressure perturbation
};

/// Random perturbation of one side consistent with the front: dv1 = phi_t + v_tan.grad_phi,
/// dH1 = H_tan.grad_phi and total pressure equal to front.q.
Vec8 coupled_perturbation(const SheetSide& side, const FrontPerturbation& front, Rng& rng);

struct DissipativityJump {
  double jump = 0.0;   // beta+ (A1+ U+, U+) - beta- (A1- U-, U-)
  double scale = 0.0;  // beta+ |(A1+ U+, U+)| + beta- |(A1- U-, U-)|
};

/// Throws WindowViolation when either lambda is outside its window.
DissipativityJump dissipativity_check(const SheetSide& plus, const SheetSide& minus,
                                      const SidePair& lambda, const Vec8& dU_plus,
                                      const Vec8& dU_minus);

}  // namespace rmhd
