#pragma once

#include <cstdint>
#include <random>

#include "rmhd/linalg.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

// Seeded generator with a platform-independent uniform draw (53-bit mantissa
// from mt19937_64), so reports are bit-reproducible for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream `stream` of a run seeded with `seed`.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double sign() { return (engine_() >> 63) != 0 ? 1.0 : -1.0; }
  Vec3 unit_vector();
  Vec2 unit_vector_2d();

 private:
  std::mt19937_64 engine_;
};

struct StateSampling {
  double v_max = 0.9;
  double gamma_min = 1.1;
  double gamma_max = 2.0;
  double p_min = 0.05;
  double p_max = 5.0;
  double S_abs = 1.0;
  double H_min = 0.2;
  double H_max = 3.0;
};

/// Random hyperbolic state: |v| uniform in [0, v_max], |H| uniform in [H_min, H_max].
PrimitiveState random_state(Rng& rng, const StateSampling& s = {});

/// Random sheet side: v and H tangential to the plane x^1 = 0.
PrimitiveState random_sheet_state(Rng& rng, const StateSampling& s = {});

}  // namespace rmhd
