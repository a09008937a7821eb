// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "cli_runner.hpp"
#include "rmhd/conservative.hpp"
#include "rmhd/cvs.hpp"
#include "rmhd/secondary.hpp"
#include "support.hpp"

using namespace rmhd;

namespace {

// Pinned tolerances and sample sizes.
constexpr int kSymmetryStates = 1000;
constexpr double kSymmetryTol = 1e-12;
constexpr double kSymmetrySeconds = 10.0;
constexpr double kSecondaryFraction = 0.5;
constexpr double kInsideFactor = 0.9;
constexpr double kOutsideFactor = 1.1;

constexpr int kDualStates = 500;
constexpr double kDualTol = 1e-11;
constexpr double kDualVmax = 0.99;

constexpr int kEulerStates = 200;
constexpr double kEulerTol = 1e-13;

constexpr int kOracleTrials = 1000;
constexpr std::array<double, 5> kOracleLambdaFactors{0.0, 0.45, -0.45, 0.9, -0.9};
constexpr double kOracleTol = kEquivalenceTolerance;
constexpr double kViolationFloor = 1e-2;
constexpr double kOracleSeconds = 60.0;

constexpr int kBoundaryTrials = 500;
constexpr double kBoundaryTol = 1e-10;

constexpr int kDissipativityTrials = 500;
constexpr double kDissipativityTol = 1e-10;
constexpr double kPerturbedFloor = 1e-3;
constexpr double kControlVelocityJump = 0.1;  // |[v_tan]|
constexpr double kControlAlignment = 0.5;     // |cos| between grad phi and [v_tan]
constexpr double kPerturbedFraction = 0.95;
constexpr double kLambdaTildeMargin = 0.8;
constexpr double kLambdaTildeShift = 1.1;

constexpr int kEquivalencePairs = 10000;
constexpr double kBorderlineG = 1e-10;
constexpr int kBisectionPairs = 200;
constexpr double kCrossingTol = 1e-10;

constexpr int kClassicalPairs = 1000;
constexpr double kClassicalSpeed = 1e-6;
constexpr double kClassicalEnthalpyExcess = 1e-6;
constexpr double kClassicalTol = 1e-4;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<PrimitiveState> random_states(std::uint64_t seed, int count, const StateSampling& s) {
  Rng rng(seed);
  std::vector<PrimitiveState> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_state(rng, s));
  return out;
}

double quadruple_defect(const MatrixQuadruple& q) {
  double worst = symmetry_defect(q.A0);
  for (const Mat8& A : q.A) worst = std::max(worst, symmetry_defect(A));
  return worst;
}

Outcome symmetry_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  double primary = 0.0;
  double secondary = 0.0;
  for (const PrimitiveState& U : random_states(1001, kSymmetryStates, {.v_max = 0.99})) {
    primary = std::max(primary, quadruple_defect(build_primary(U)));
    const double lambda = kSecondaryFraction * window_bound(U);
    secondary = std::max(secondary, quadruple_defect(build_secondary(U, lambda).quadruple));
  }
  const double elapsed = seconds_since(t0);
  return {primary <= kSymmetryTol && secondary <= kSymmetryTol && elapsed < kSymmetrySeconds,
          fmt::format("max defect primary {:.2e}, secondary {:.2e} (tol {:.0e}); {:.2f} s (limit {} s)",
                      primary, secondary, kSymmetryTol, elapsed, kSymmetrySeconds)};
}

Outcome hyperbolicity_suite() {
  double min_primary = INFINITY;
  double min_inside = INFINITY;
  double max_outside = -INFINITY;
  for (const PrimitiveState& U : random_states(1001, kSymmetryStates, {.v_max = 0.99})) {
    min_primary = std::min(min_primary, min_eigenvalue(build_primary(U).A0));
    const double m = window_bound(U);
    for (double sign : {1.0, -1.0}) {
      min_inside = std::min(min_inside,
                            min_eigenvalue(build_secondary(U, sign * kInsideFactor * m).quadruple.A0));
      max_outside = std::max(
          max_outside, min_eigenvalue(build_secondary(U, sign * kOutsideFactor * m).quadruple.A0));
    }
  }
  return {min_primary > 0.0 && min_inside > 0.0 && max_outside < 0.0,
          fmt::format("min eig A0 {:.3e}; at 0.9m min {:.3e}; at 1.1m max {:.3e}", min_primary,
                      min_inside, max_outside)};
}

Outcome dual_construction() {
  auto states = random_states(1003, kDualStates - 4, {.v_max = kDualVmax});
  Rng rng(1004);
  for (int i = 0; i < 4; ++i) {
    states.push_back(PrimitiveState::from_velocity(1.0, rng.unit_vector() * kDualVmax,
                                                   rng.unit_vector() * 2.0, 0.0, EosModel{}));
  }
  double worst = 0.0;
  double fastest = 0.0;
  for (const PrimitiveState& U : states) {
    const MatrixQuadruple a = build_primary(U);
    const MatrixQuadruple b = build_via_boost(U);
    worst = std::max(worst, test::relative_deviation(a.A0, b.A0));
    for (int j = 0; j < 3; ++j) worst = std::max(worst, test::relative_deviation(a.A[j], b.A[j]));
    fastest = std::max(fastest, derive(U).v.norm());
  }
  return {worst <= kDualTol,
          fmt::format("max relative deviation {:.2e} (tol {:.0e}) over {} states, max |v| {:.4f}",
                      worst, kDualTol, states.size(), fastest)};
}

Outcome euler_reduction() {
  StateSampling s{.v_max = 0.99};
  s.H_min = s.H_max = 0.0;
  double worst = 0.0;
  for (const PrimitiveState& U : random_states(1005, kEulerStates, s)) {
    const auto ref = test::euler_matrices(U.eos.gamma_ad, U.p, U.u, U.S);
    const MatrixQuadruple q = build_primary(U);
    worst = std::max(worst, test::relative_deviation(test::euler_minor(q.A0), ref.B0));
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, test::relative_deviation(test::euler_minor(q.A[j]), ref.B[j]));
    }
  }
  return {worst <= kEulerTol,
          fmt::format("max relative deviation {:.2e} (tol {:.0e})", worst, kEulerTol)};
}

Outcome equivalence_oracle_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::vector<double> violated;
  violated.reserve(kOracleTrials);
  for (int t = 0; t < kOracleTrials; ++t) {
    Rng rng = Rng::for_stream(1006, t);
    const PrimitiveState U = random_state(rng);
    const QuasilinearJacobians jac = quasilinear_jacobians(U);
    const DerivativeSample sample = draw_constrained_derivatives(rng, 0.0);
    const double m = window_bound(U);
    for (double f : kOracleLambdaFactors) {
      const MatrixQuadruple q = f == 0.0 ? build_primary(U) : build_secondary(U, f * m).quadruple;
      worst = std::max(worst, equivalence_residual(q, jac, sample));
    }
    violated.push_back(
        equivalence_residual(build_primary(U), jac, draw_constrained_derivatives(rng, 1.0)));
  }
  std::sort(violated.begin(), violated.end());
  const double median = violated[violated.size() / 2];
  const double elapsed = seconds_since(t0);
  return {worst <= kOracleTol && median >= kViolationFloor && elapsed < kOracleSeconds,
          fmt::format("max residual {:.2e} (tol {:.0e}) over {} x {} lambdas; violated control "
                      "median {:.2e}, min {:.2e} (floor {:.0e}); {:.2f} s",
                      worst, kOracleTol, kOracleTrials, kOracleLambdaFactors.size(), median,
                      violated.front(), kViolationFloor, elapsed)};
}

Outcome boundary_form_identity() {
  Rng rng(1007);
  double worst = 0.0;
  for (int i = 0; i < kBoundaryTrials; ++i) {
    const SheetSide s = SheetSide::make(random_sheet_state(rng, {.v_max = 0.95}));
    const double lambda = rng.uniform(-kInsideFactor, kInsideFactor) * window_bound(s.derived);
    Vec8 dU;
    for (int k = 0; k < 8; ++k) dU(k) = rng.uniform(-1.0, 1.0);
    const BoundaryForm f = boundary_form(s, lambda, dU);
    worst = std::max(worst, test::relative_gap(f.quadratic, f.closed_form));
  }
  return {worst <= kBoundaryTol,
          fmt::format("max relative gap {:.2e} (tol {:.0e})", worst, kBoundaryTol)};
}

Outcome dissipativity() {
  Rng rng(1008);
  double worst_matched = 0.0;
  double worst_closed = 0.0;
  double weakest_shift = std::numeric_limits<double>::infinity();
  int controls = 0;
  int trials = 0;
  while (trials < kDissipativityTrials) {
    const auto [plus, minus] = test::random_sheet_pair(rng, {.v_max = 0.3});
    const StabilityReport r = stability_margin(plus, minus);
    if (!(std::abs(r.lambda_tilde.plus) < kLambdaTildeMargin * r.bounds.plus &&
          std::abs(r.lambda_tilde.minus) < kLambdaTildeMargin * r.bounds.minus && r.jump > 0.0)) {
      continue;
    }
    ++trials;
    const FrontPerturbation front{rng.uniform(-1.0, 1.0), rng.unit_vector_2d(),
                                  rng.uniform(0.1, 1.0) * rng.sign()};
    const Vec8 up = coupled_perturbation(plus, front, rng);
    const Vec8 um = coupled_perturbation(minus, front, rng);
    const DissipativityJump matched = dissipativity_check(plus, minus, r.lambda, up, um);
    worst_matched = std::max(worst_matched, std::abs(matched.jump) / matched.scale);

    const SidePair shifted{lambda_from_tilde(plus, kLambdaTildeShift * r.lambda_tilde.plus),
                           lambda_from_tilde(minus, kLambdaTildeShift * r.lambda_tilde.minus)};
    const DissipativityJump off = dissipativity_check(plus, minus, shifted, up, um);
    // Shifting both lambda_tilde by the factor s leaves the jump -2 q (s - 1) ([v_tan], grad phi),
    // so it vanishes for fronts orthogonal to the velocity jump. The floor applies away from that set.
    const Vec2 jump = plus.v_tan() - minus.v_tan();
    const double expected = -2.0 * front.q * (kLambdaTildeShift - 1.0) * jump.dot(front.grad_phi);
    worst_closed = std::max(worst_closed, std::abs(off.jump - expected) / off.scale);
    if (jump.norm() >= kControlVelocityJump &&
        std::abs(jump.normalized().dot(front.grad_phi)) >= kControlAlignment) {
      ++controls;
      weakest_shift = std::min(weakest_shift, std::abs(off.jump) / off.scale);
    }
  }
  return {worst_matched <= kDissipativityTol && worst_closed <= kDissipativityTol &&
              controls >= kDissipativityTrials / 4 && weakest_shift >= kPerturbedFloor,
          fmt::format("matched |jump|/scale max {:.2e} (tol {:.0e}); 10% shift matches closed form "
                      "to {:.2e}, min |jump|/scale {:.2e} over {} transverse fronts (floor {:.0e})",
                      worst_matched, kDissipativityTol, worst_closed, weakest_shift, controls,
                      kPerturbedFloor)};
}

double window_ratio(const StabilityReport& r) {
  return std::max(std::abs(r.lambda_tilde.plus) / r.bounds.plus,
                  std::abs(r.lambda_tilde.minus) / r.bounds.minus);
}

Outcome criterion_equivalence() {
  Rng rng(1009);
  int disagreements = 0;
  int borderline = 0;
  int stable = 0;
  for (int i = 0; i < kEquivalencePairs; ++i) {
    const auto [plus, minus] = test::random_sheet_pair(rng, {.v_max = 0.3}, 1e-3);
    const StabilityReport r = stability_margin(plus, minus);
    if (r.stable) ++stable;
    if (r.stable != r.windows_ok) {
      if (std::abs(r.G) < kBorderlineG) {
        ++borderline;
      } else {
        ++disagreements;
      }
    }
  }

  double worst_crossing = 0.0;
  int crossings = 0;
  while (crossings < kBisectionPairs) {
    auto [plus, minus] = test::random_sheet_pair(rng, {.v_max = 0.2});
    const Vec2 dir = rng.unit_vector_2d();
    // largest jump that keeps the plus side subluminal
    const Vec2 base = minus.v_tan();
    const double bdir = base.dot(dir);
    const double t_max = 0.999 * (-bdir + std::sqrt(bdir * bdir + 1.0 - base.squaredNorm()));
    const auto G_at = [&](double t) {
      return stability_margin(test::with_jump(plus, minus, t * dir), minus);
    };
    if (!(G_at(0.0).G > 0.0 && G_at(t_max).G < 0.0)) continue;
    double lo = 0.0;
    double hi = t_max;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (G_at(mid).G > 0.0 ? lo : hi) = mid;
    }
    ++crossings;
    worst_crossing = std::max(worst_crossing, std::abs(window_ratio(G_at(lo)) - 1.0));
  }
  return {disagreements == 0 && worst_crossing <= kCrossingTol,
          fmt::format("{} pairs ({} stable): {} disagreements, {} within |G| < {:.0e}; "
                      "crossing |ratio - 1| max {:.2e} over {} bisections (tol {:.0e})",
                      kEquivalencePairs, stable, disagreements, borderline, kBorderlineG,
                      worst_crossing, kBisectionPairs, kCrossingTol)};
}

// Cold, slow sheet side: |v| = kClassicalSpeed and h - 1 log-uniform below the pinned excess.
std::pair<SheetSide, test::ClassicalSide> cold_side(Rng& rng) {
  const double gamma = rng.uniform(1.1, 2.0);
  // p stays O(1) and the density absorbs the small p / rho, so fields stay O(1) too
  const double p = rng.uniform(0.5, 2.0);
  const double excess = kClassicalEnthalpyExcess * std::pow(10.0, rng.uniform(-7.0, 0.0));
  const double theta = excess * (gamma - 1.0) / gamma;  // p / rho
  const double rho = p / theta;
  const double a2 = gamma * theta;
  const Vec2 vt = kClassicalSpeed * rng.unit_vector_2d();
  const Vec2 Ht = rng.uniform(0.3, 3.0) * std::sqrt(rho * a2) * rng.unit_vector_2d();
  return {SheetSide::make(test::sheet_state(gamma, rho, theta, vt, Ht)),
          test::ClassicalSide{rho, a2, vt, Ht}};
}

Outcome classical_limit() {
  Rng rng(1010);
  double worst = 0.0;
  double max_excess = 0.0;
  double max_speed = 0.0;
  int negative = 0;
  int pairs = 0;
  while (pairs < kClassicalPairs) {
    const auto [plus, cplus] = cold_side(rng);
    const auto [minus, cminus] = cold_side(rng);
    const double sin_delta = std::abs(wedge(plus.H_tan(), minus.H_tan())) /
                             (plus.H_tan().norm() * minus.H_tan().norm());
    if (sin_delta < 0.05) continue;
    ++pairs;
    const double G = stability_margin(plus, minus).G;
    const double classical = test::classical_margin(cplus, cminus);
    // scale of G: its first term, so that pairs near G = 0 are still measured relative to the
    // quantities being compared
    const double scale = classical + (cplus.v - cminus.v).norm();
    worst = std::max(worst, std::abs(G - classical) / scale);
    if (classical < 0.0) ++negative;
    for (const SheetSide* s : {&plus, &minus}) {
      max_excess = std::max(max_excess, s->derived.h - 1.0);
      max_speed = std::max(max_speed, s->derived.v.norm());
    }
  }
  return {worst <= kClassicalTol,
          fmt::format("max relative gap {:.2e} (tol {:.0e}) over {} pairs ({} unstable); "
                      "max h - 1 {:.1e}, max |v| {:.1e}",
                      worst, kClassicalTol, pairs, negative, max_excess, max_speed)};
}

Outcome determinism() {
  const std::string sheet = std::string("'") + RMHD_TEST_DATA + "/sheet.json'";
  const std::string state = std::string("'") + RMHD_TEST_DATA + "/rest_state.json'";
  const std::vector<std::string> commands{
      "verify --trials 1000 --seed 47",
      "verify --trials 200 --seed 3 --lambda 0.05",
      "sweep --grid 0:0.8:40,-3.1:3.1:40 --input " + sheet,
      "cvs --input " + sheet,
      "matrices --format csv --lambda 0.2 --input " + state,
  };
  int mismatches = 0;
  bool verify_ok = true;
  for (const std::string& cmd : commands) {
    const auto a = test::run_cli(cmd, "OMP_NUM_THREADS=1 ");
    const auto b = test::run_cli(cmd, "OMP_NUM_THREADS=4 ");
    const auto c = test::run_cli(cmd);
    if (a.exit_code != 0 || a.out.empty() || a.out != b.out || a.out != c.out) ++mismatches;
    if (cmd.rfind("verify --trials 1000", 0) == 0) {
      const auto j = nlohmann::json::parse(a.out);
      verify_ok = j["failures"] == 0 && j["max_residual"].get<double>() <= kOracleTol;
    }
  }
  return {mismatches == 0 && verify_ok,
          fmt::format("{} commands x 3 runs (1, 4, default threads): {} mismatches; verify "
                      "--trials 1000 --seed 47 {}",
                      commands.size(), mismatches, verify_ok ? "passes" : "fails")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"symmetry", symmetry_suite},
      {"hyperbolicity", hyperbolicity_suite},
      {"dual construction", dual_construction},
      {"Euler reduction", euler_reduction},
      {"equivalence oracle", equivalence_oracle_suite},
      {"boundary form", boundary_form_identity},
      {"dissipativity", dissipativity},
      {"criterion equivalence", criterion_equivalence},
      {"non-relativistic limit", classical_limit},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
