#include "rmhd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "rmhd/errors.hpp"

namespace rmhd {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double grid_point(double lo, double hi, int count, int i) {
  if (count == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

SweepRow sweep_point(const SheetSide& plus, const SheetSide& minus, const SweepGrid& grid,
                     const SheetOptions& opts, int i, int k) {
  SweepRow row{grid.dv(i), grid.dphi(k), kNaN, false};
  try {
    const SheetSide p = SheetSide::make(sweep_plus_state(plus, minus, row.dv));
    const SheetSide m = SheetSide::make(sweep_minus_state(plus, minus, row.dphi));
    const StabilityReport r = stability_margin(p, m, opts);
    row.G = r.G;
    row.stable = r.stable;
  } catch (const Error&) {
    // degenerate or superluminal grid point: G stays NaN, verdict unstable
  }
  return row;
}

struct TrialContext {
  const VerifyConfig& cfg;
  std::optional<QuasilinearJacobians> fixed_jacobians;
  std::optional<MatrixQuadruple> fixed_quadruple;

  explicit TrialContext(const VerifyConfig& c) : cfg(c) {
    if (cfg.state) {
      fixed_jacobians = quasilinear_jacobians(*cfg.state);
      fixed_quadruple = quadruple_for(*cfg.state);
    }
  }

  MatrixQuadruple quadruple_for(const PrimitiveState& U) const {
    return cfg.lambda ? build_secondary(U, *cfg.lambda).quadruple : build_primary(U);
  }

  double run(std::size_t t) const {
    Rng rng = Rng::for_stream(cfg.seed, t);
    if (cfg.state) {
      return equivalence_residual(*fixed_quadruple, *fixed_jacobians,
                                  draw_constrained_derivatives(rng, cfg.divergence));
    }
    const PrimitiveState U = random_state(rng, cfg.sampling);
    const QuasilinearJacobians jac = quasilinear_jacobians(U);
    return equivalence_residual(quadruple_for(U), jac,
                                draw_constrained_derivatives(rng, cfg.divergence));
  }
};

}  // namespace

SweepGrid SweepGrid::parse(const std::string& spec) {
  SweepGrid g;
  char c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
  std::istringstream in(spec);
  in >> g.dv_min >> c1 >> g.dv_max >> c2 >> g.n >> c3 >> g.dphi_min >> c4 >> g.dphi_max >> c5 >>
      g.m;
  std::string rest;
  in >> rest;
  if (in.fail() && !in.eof()) in.clear();
  const bool ok = c1 == ':' && c2 == ':' && c3 == ',' && c4 == ':' && c5 == ':' && g.n >= 1 &&
                  g.m >= 1 && rest.empty() && std::isfinite(g.dv_min) &&
                  std::isfinite(g.dv_max) && std::isfinite(g.dphi_min) &&
                  std::isfinite(g.dphi_max);
  if (!ok) {
    throw Error(ErrorKind::InvalidInput,
                "grid must look like dv_min:dv_max:n,dphi_min:dphi_max:m, got '" + spec + "'");
  }
  return g;
}

double SweepGrid::dv(int i) const { return grid_point(dv_min, dv_max, n, i); }
double SweepGrid::dphi(int k) const { return grid_point(dphi_min, dphi_max, m, k); }

PrimitiveState sweep_plus_state(const SheetSide& plus, const SheetSide& minus, double dv) {
  Vec2 dir = plus.v_tan() - minus.v_tan();
  dir = dir.squaredNorm() > 0.0 ? Vec2(dir.normalized()) : Vec2(1.0, 0.0);
  const Vec2 vt = minus.v_tan() + dv * dir;
  const PrimitiveState& U = plus.state;
  return PrimitiveState::from_velocity(U.p, Vec3(0.0, vt.x(), vt.y()), U.H, U.S, U.eos);
}

PrimitiveState sweep_minus_state(const SheetSide& plus, const SheetSide& minus, double dphi) {
  const Vec2 ref = plus.H_tan().normalized();
  const Vec2 dir = Eigen::Rotation2Dd(dphi) * ref;
  const Vec2 Ht = minus.H_tan().norm() * dir;
  PrimitiveState U = minus.state;
  U.H = Vec3(0.0, Ht.x(), Ht.y());
  return U;
}

std::vector<SweepRow> sweep(const SheetSide& plus, const SheetSide& minus, const SweepGrid& grid,
                            const SheetOptions& opts) {
  std::vector<SweepRow> rows(static_cast<std::size_t>(grid.n) * grid.m);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid.n; ++i) {
    for (int k = 0; k < grid.m; ++k) {
      rows[static_cast<std::size_t>(i) * grid.m + k] = sweep_point(plus, minus, grid, opts, i, k);
    }
  }
  return rows;
}

std::vector<SweepRow> sweep_serial(const SheetSide& plus, const SheetSide& minus,
                                   const SweepGrid& grid, const SheetOptions& opts) {
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.n) * grid.m);
  for (int i = 0; i < grid.n; ++i) {
    for (int k = 0; k < grid.m; ++k) rows.push_back(sweep_point(plus, minus, grid, opts, i, k));
  }
  return rows;
}

std::vector<double> verify_residuals(const VerifyConfig& cfg) {
  const TrialContext ctx(cfg);
  const auto trials = static_cast<std::int64_t>(cfg.trials);
  std::vector<double> residuals(cfg.trials, 0.0);
  std::vector<std::exception_ptr> errors(cfg.trials);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t t = 0; t < trials; ++t) {
    try {
      residuals[t] = ctx.run(static_cast<std::size_t>(t));
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return residuals;
}

std::vector<double> verify_residuals_serial(const VerifyConfig& cfg) {
  const TrialContext ctx(cfg);
  std::vector<double> residuals;
  residuals.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) residuals.push_back(ctx.run(t));
  return residuals;
}

ResidualReport summarize(const std::vector<double>& residuals, std::optional<double> lambda,
                         double tolerance) {
  ResidualReport r;
  r.trials = residuals.size();
  r.lambda = lambda;
  double sum = 0.0;
  for (double x : residuals) {
    r.max_residual = std::max(r.max_residual, x);
    sum += x;
    if (!(x <= tolerance)) ++r.failures;
  }
  if (!residuals.empty()) r.mean_residual = sum / static_cast<double>(residuals.size());
  return r;
}

}  // namespace rmhd
