#include "rmhd/sampling.hpp"

#include <cmath>
#include <numbers>

#include "rmhd/errors.hpp"

namespace rmhd {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename Draw>
PrimitiveState draw_admissible(Draw&& draw) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PrimitiveState U = draw();
    if (check_hyperbolic(U).ok()) return U;
  }
  throw Error(ErrorKind::InvalidInput, "sampling ranges admit no hyperbolic state");
}

}  // namespace

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 1)));
}

Vec3 Rng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3(r * std::cos(phi), r * std::sin(phi), z);
}

Vec2 Rng::unit_vector_2d() {
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return Vec2(std::cos(phi), std::sin(phi));
}

PrimitiveState random_state(Rng& rng, const StateSampling& s) {
  return draw_admissible([&] {
    const EosModel eos{rng.uniform(s.gamma_min, s.gamma_max)};
    const double p = rng.uniform(s.p_min, s.p_max);
    const double S = rng.uniform(-s.S_abs, s.S_abs);
    const Vec3 v = rng.unit_vector() * rng.uniform(0.0, s.v_max);
    const Vec3 H = rng.unit_vector() * rng.uniform(s.H_min, s.H_max);
    return PrimitiveState::from_velocity(p, v, H, S, eos);
  });
}

PrimitiveState random_sheet_state(Rng& rng, const StateSampling& s) {
  return draw_admissible([&] {
    const EosModel eos{rng.uniform(s.gamma_min, s.gamma_max)};
    const double p = rng.uniform(s.p_min, s.p_max);
    const double S = rng.uniform(-s.S_abs, s.S_abs);
    const Vec2 vt = rng.unit_vector_2d() * rng.uniform(0.0, s.v_max);
    const Vec2 Ht = rng.unit_vector_2d() * rng.uniform(s.H_min, s.H_max);
    return PrimitiveState::from_velocity(p, Vec3(0.0, vt.x(), vt.y()), Vec3(0.0, Ht.x(), Ht.y()),
                                         S, eos);
  });
}

}  // namespace rmhd
