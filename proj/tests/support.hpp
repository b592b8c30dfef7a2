#pragma once

#include <array>
#include <cmath>
#include <random>

#include "scherk/surface.hpp"
#include "scherk/verify.hpp"

namespace scherk::testing {

inline constexpr std::uint64_t kSweepSeed = 0x5c4e7c;

/// Uniform point of the disk of radius r_max.
inline cplx disk_point(std::mt19937_64& rng, double r_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = r_max * std::sqrt(u(rng));
  return std::polar(r, 2.0 * kPi * u(rng));
}

/// Vertices of Q(-1, h(m,t), 1, h(m,s)) moved by a random rotation, scale and translation,
/// listed from a random starting vertex.
inline std::array<cplx, 4> random_pitot_vertices(std::mt19937_64& rng) {
  const auto [m, s, t] = random_params(rng);
  const PitotQuad q = construct_quad(m, s, t);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), lsc(std::log(0.2), std::log(5.0)), tr(-3.0, 3.0);
  std::uniform_int_distribution<int> start(0, 3);
  const cplx a = std::polar(std::exp(lsc(rng)), ang(rng));
  const cplx b(tr(rng), tr(rng));
  const int k = start(rng);
  std::array<cplx, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = a * q.b[(i + k) % 4] + b;
  return v;
}

inline double dist3(const Vec3& a, const Vec3& b) {
  return std::sqrt(norm2({a[0] - b[0], a[1] - b[1], a[2] - b[2]}));
}

}  // namespace scherk::testing
