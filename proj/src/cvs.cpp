#include "rmhd/cvs.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rmhd/errors.hpp"

namespace rmhd {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSingularThreshold = 1e-12;

void require_tangential_fields(const SheetSide& plus, const SheetSide& minus) {
  if (plus.H_tan().squaredNorm() == 0.0 || minus.H_tan().squaredNorm() == 0.0) {
    throw Error(ErrorKind::ZeroTangentialField, "tangential magnetic field vanishes on a side");
  }
}

void require_window(const SheetSide& side, double lambda) {
  const double m = window_bound(side.derived);
  if (!(std::abs(lambda) < m)) {
    throw Error(ErrorKind::WindowViolation, "|lambda| = " + describe(std::abs(lambda)) +
                                                " is not below the window bound " +
                                                describe(m));
  }
}

double boundary_quadratic(const SheetSide& side, double lambda, const Vec8& dU) {
  const SecondaryKit kit = build_secondary(side.state, lambda);
  return dU.dot(kit.quadruple.spatial(Axis::x) * dU);
}

}  // namespace

SheetSide SheetSide::make(const PrimitiveState& U, double tol) {
  SheetSide side{U, require_hyperbolic(U)};
  if (std::abs(side.derived.v.x()) > tol || std::abs(U.H.x()) > tol) {
    throw Error(ErrorKind::NotASheetSide, "sheet sides need v1 = 0 and H1 = 0");
  }
  return side;
}

SidePair solve_lambda_tilde(const SheetSide& plus, const SheetSide& minus,
                            const SheetOptions& opts) {
  require_tangential_fields(plus, minus);
  const Vec2 Hp = plus.H_tan();
  const Vec2 Hm = minus.H_tan();
  const double det = wedge(Hp, Hm);
  if (!(std::abs(det) >= opts.epsilon)) {
    throw Error(ErrorKind::DegenerateTangentialFields,
                "tangential fields are parallel: |H2+ H3- - H3+ H2-| = " +
                    describe(std::abs(det)));
  }
  const Vec2 jump = plus.v_tan() - minus.v_tan();
  return SidePair{wedge(jump, Hm) / det, wedge(jump, Hp) / det};
}

double gamma_factor(const SheetSide& side) {
  const DerivedState& d = side.derived;
  const double cs = std::sqrt(d.cs2);
  return side.H_tan().norm() * cs * (1.0 - d.v.squaredNorm()) /
         (std::sqrt(d.rho * d.a2 + d.B2) + cs * std::abs(side.vH()));
}

double tangential_bound(const SheetSide& side) {
  const double g = side.lorentz();
  return (1.0 / (g * g)) / (1.0 / window_bound(side.derived) + std::abs(side.vH()));
}

double lambda_tilde_from_lambda(const SheetSide& side, double lambda) {
  const double denom = 1.0 - lambda * side.vH();
  if (std::abs(denom) < kSingularThreshold) {
    throw Error(ErrorKind::SingularMap, "1 - lambda (v,H) vanishes");
  }
  const double g = side.lorentz();
  return lambda / (g * g * denom);
}

double lambda_from_tilde(const SheetSide& side, double lambda_tilde) {
  const double g = side.lorentz();
  const double scaled = g * g * lambda_tilde;
  const double denom = 1.0 + scaled * side.vH();
  if (std::abs(denom) < kSingularThreshold) {
    throw Error(ErrorKind::SingularMap, "1 + lambda_hat (v,H) vanishes");
  }
  return scaled / denom;
}

StabilityReport stability_margin(const SheetSide& plus, const SheetSide& minus,
                                 const SheetOptions& opts) {
  StabilityReport r;
  r.lambda_tilde = solve_lambda_tilde(plus, minus, opts);

  const Vec2 Hp = plus.H_tan();
  const Vec2 Hm = minus.H_tan();
  const Vec2 jump = plus.v_tan() - minus.v_tan();
  r.det_tangential = wedge(Hp, Hm);
  r.nondegenerate = std::abs(r.det_tangential) >= opts.epsilon;
  r.jump = jump.norm();
  r.gamma = SidePair{gamma_factor(plus), gamma_factor(minus)};
  r.bounds = SidePair{tangential_bound(plus), tangential_bound(minus)};

  r.angles.sin_delta = wedge(Hm, Hp) / (Hp.norm() * Hm.norm());
  const double sin_delta = std::abs(r.angles.sin_delta);
  if (r.jump == 0.0) {
    r.angles.cos_plus = r.angles.sin_plus = r.angles.cos_minus = r.angles.sin_minus = kNaN;
    r.G = sin_delta * std::min(r.gamma.plus, r.gamma.minus);
  } else {
    const double np = r.jump * Hp.norm();
    const double nm = r.jump * Hm.norm();
    r.angles.cos_plus = jump.dot(Hp) / np;
    r.angles.sin_plus = wedge(jump, Hp) / np;
    r.angles.cos_minus = jump.dot(Hm) / nm;
    r.angles.sin_minus = wedge(jump, Hm) / nm;
    const auto ratio = [](double gamma, double s) {
      return s == 0.0 ? std::numeric_limits<double>::infinity() : gamma / std::abs(s);
    };
    r.G = sin_delta * std::min(ratio(r.gamma.plus, r.angles.sin_minus),
                               ratio(r.gamma.minus, r.angles.sin_plus)) -
          r.jump;
  }

  const auto to_lambda = [](const SheetSide& side, double lt) {
    try {
      return lambda_from_tilde(side, lt);
    } catch (const Error&) {
      return kNaN;
    }
  };
  r.lambda = SidePair{to_lambda(plus, r.lambda_tilde.plus), to_lambda(minus, r.lambda_tilde.minus)};
  r.windows_ok = std::abs(r.lambda_tilde.plus) < r.bounds.plus &&
                 std::abs(r.lambda_tilde.minus) < r.bounds.minus;
  r.stable = r.G > 0.0 && r.nondegenerate;
  return r;
}

double total_pressure_perturbation(const SheetSide& side, const Vec8& dU) {
  const DerivedState& d = side.derived;
  const Vec3 du = dU.segment<3>(slot::u);
  const Vec3 dH = dU.segment<3>(slot::H);
  const Vec3& H = side.state.H;
  return dU(slot::p) + (d.b.dot(dH) + side.vH() * H.dot(du) - d.B2 * d.v.dot(du)) / d.lorentz;
}

BoundaryForm boundary_form(const SheetSide& side, double lambda, const Vec8& dU) {
  require_window(side, lambda);
  const double g = side.lorentz();
  const double q = total_pressure_perturbation(side, dU);
  const double dv1 = dU(slot::u) / g;
  BoundaryForm out;
  out.quadratic = boundary_quadratic(side, lambda, dU);
  out.closed_form =
      2.0 * g * q * ((1.0 - lambda * side.vH()) * dv1 - lambda / (g * g) * dU(slot::H));
  return out;
}

Vec8 coupled_perturbation(const SheetSide& side, const FrontPerturbation& front, Rng& rng) {
  Vec8 dU;
  for (int k = 0; k < 8; ++k) dU(k) = rng.uniform(-1.0, 1.0);
  dU(slot::u) = side.lorentz() * (front.phi_t + side.v_tan().dot(front.grad_phi));
  dU(slot::H) = side.H_tan().dot(front.grad_phi);
  dU(slot::p) = 0.0;
  dU(slot::p) = front.q - total_pressure_perturbation(side, dU);
  return dU;
}

DissipativityJump dissipativity_check(const SheetSide& plus, const SheetSide& minus,
                                      const SidePair& lambda, const Vec8& dU_plus,
                                      const Vec8& dU_minus) {
  require_window(plus, lambda.plus);
  require_window(minus, lambda.minus);
  const auto weight = [](const SheetSide& side, double l) {
    return 1.0 / (side.lorentz() * (1.0 - l * side.vH()));
  };
  const double qp = weight(plus, lambda.plus) * boundary_quadratic(plus, lambda.plus, dU_plus);
  const double qm = weight(minus, lambda.minus) * boundary_quadratic(minus, lambda.minus, dU_minus);
  return DissipativityJump{qp - qm, std::abs(qp) + std::abs(qm)};
}

}  // namespace rmhd
