#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmhd/conservative.hpp"
#include "rmhd/cvs.hpp"

namespace rmhd {

// Batch kernels. Each has an OpenMP version and a serial reference that must
// produce bitwise-identical results.

struct SweepGrid {
  double dv_min = 0.0;
  double dv_max = 0.0;
  int n = 1;
  double dphi_min = 0.0;
  double dphi_max = 0.0;
  int m = 1;

  /// "dv_min:dv_max:n,dphi_min:dphi_max:m"; throws InvalidInput.
  static SweepGrid parse(const std::string& spec);

  double dv(int i) const;
  double dphi(int k) const;
};

struct SweepRow {
  double dv = 0.0;
  double dphi = 0.0;
  double G = 0.0;  // NaN when the grid point is degenerate or superluminal
  bool stable = false;
};

/// The plus side keeps its state except v_tan+ = v_tan- + dv * e, where e is the
/// direction of the base velocity jump (e2 if the jump is zero). The minus side
/// keeps |H_tan-| and is rotated so that H_tan- sits at angle dphi from H_tan+.
PrimitiveState sweep_plus_state(const SheetSide& plus, const SheetSide& minus, double dv);
PrimitiveState sweep_minus_state(const SheetSide& plus, const SheetSide& minus, double dphi);

std::vector<SweepRow> sweep(const SheetSide& plus, const SheetSide& minus, const SweepGrid& grid,
                            const SheetOptions& opts = {});
std::vector<SweepRow> sweep_serial(const SheetSide& plus, const SheetSide& minus,
                                   const SweepGrid& grid, const SheetOptions& opts = {});

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::optional<double> lambda;          // absent: primary quadruple
  std::optional<PrimitiveState> state;   // absent: a fresh random state per trial
  double divergence = 0.0;               // imposed div H of the derivative draws
  StateSampling sampling{};
};

/// Per-trial equivalence residuals in trial order.
std::vector<double> verify_residuals(const VerifyConfig& cfg);
std::vector<double> verify_residuals_serial(const VerifyConfig& cfg);

ResidualReport summarize(const std::vector<double>& residuals, std::optional<double> lambda,
                         double tolerance = kEquivalenceTolerance);

inline ResidualReport verify(const VerifyConfig& cfg) {
  return summarize(verify_residuals(cfg), cfg.lambda);
}

}  // namespace rmhd
