#include <doctest.h>

#include <cmath>

#include "scherk/analysis.hpp"
#include "scherk/harmonic.hpp"
#include "scherk/oracles.hpp"
#include "scherk/surface.hpp"
#include "support.hpp"

using namespace scherk;

namespace {

oracles::GraphDerivatives center_fd(const ScherkSurface& sf) {
  const auto& d = sf.data;
  const auto fmap = [&](cplx z) { return harmonic_map(z, d); };
  const auto derivs = [&](cplx z) { return std::pair<cplx, cplx>{h_prime(z, d), g_prime(z, d)}; };
  const cplx c0 = harmonic_center_normalized(d);
  return oracles::fd_graph_derivatives_extrapolated(
      [&](double u, double v) { return height_T(oracles::newton_invert(fmap, derivs, cplx(u, v)), sf.kernel); },
      c0.real(), c0.imag(), 1e-4);
}

}  // namespace

TEST_CASE("center curvature for (0.3, 1, 0.3)") {
  const ScherkSurface sf = ScherkSurface::from_params(0.3, 1.0, 0.3);
  CHECK(gauss_curvature(0.0, sf.data) == doctest::Approx(-9.0195199228049709).epsilon(1e-13));
  CHECK(std::abs(gauss_curvature(0.0, sf.data) - center_curvature_closed(sf.coords)) < 1e-10);
  CHECK(center_fd(sf).curvature() == doctest::Approx(center_curvature_closed(sf.coords)).epsilon(1e-4));
}

TEST_CASE("curvature is negative") {
  const ScherkSurface sf = ScherkSurface::from_params(1.0, -0.3, 1.4);
  std::mt19937_64 rng(testing::kSweepSeed + 300);
  for (int i = 0; i < 200; ++i) CHECK(gauss_curvature(testing::disk_point(rng, 0.999), sf.data) < 0.0);
}

TEST_CASE("center data against direct evaluation") {
  std::mt19937_64 rng(testing::kSweepSeed + 301);
  for (int n = 0; n < 200; ++n) {
    const auto [m, s, t] = random_params(rng);
    const ScherkSurface sf = ScherkSurface::from_params(m, s, t);
    const CenterData cd = center_data(sf.coords);
    CHECK(std::abs(cd.q0 - gauss_map_q(0.0, sf.data)) < 1e-10);
    CHECK(std::abs(cd.q0_prime - gauss_map_q_prime(0.0, sf.data)) < 1e-10 * std::max(1.0, std::abs(cd.q0_prime)));
    CHECK(std::abs(cd.h0_prime - h_prime(0.0, sf.data)) < 1e-10 * std::max(1.0, std::abs(cd.h0_prime)));
    CHECK(std::abs(cd.q0) < 1.0);
  }
}

TEST_CASE("center normal") {
  const auto c = HyperbolicCoords::from(0.3, 1.0, 0.3);
  const Vec3 n = center_normal(c);
  CHECK(n[0] == doctest::Approx(std::cos(0.3) * std::tanh(0.65)));
  CHECK(n[1] == doctest::Approx(-std::sin(0.3)));
  CHECK(n[2] == doctest::Approx(std::cos(0.3) / std::cosh(0.65)));
  const Vec3 g = center_gauss_sphere_point(c);
  CHECK(g[0] == doctest::Approx(std::sin(0.3)));
  CHECK(g[1] == doctest::Approx(-std::cos(0.3) * std::tanh(0.65)));

  const auto sym = HyperbolicCoords::from(0.7, 0.9, -0.9);
  const Vec3 ns = center_normal(sym), gs = center_gauss_sphere_point(sym);
  CHECK(ns[0] == doctest::Approx(0.0));
  CHECK(ns[1] == doctest::Approx(-std::sin(0.7)));
  CHECK(gs[0] == doctest::Approx(std::sin(0.7)));
  CHECK(gs[1] == doctest::Approx(0.0));
  CHECK(gs[2] == doctest::Approx(std::cos(0.7)));
}

TEST_CASE("sweep: center normal, curvature and mixed derivative") {
  std::mt19937_64 rng(testing::kSweepSeed + 302);
  for (int n = 0; n < 1000; ++n) {
    const auto [m, s, t] = random_params(rng);
    const ScherkSurface sf = ScherkSurface::from_params(m, s, t);
    const auto& c = sf.coords;
    const Vec3 nrm = center_normal(c);
    CHECK(norm2(nrm) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nrm[2] > 0.0);
    CHECK(testing::dist3(nrm, surface_normal(0.0, sf.data)) < 1e-10);
    CHECK(testing::dist3(center_gauss_sphere_point(c), stereographic_lift(gauss_map_q(0.0, sf.data))) < 1e-10);
    const double K0 = center_curvature_closed(c);
    CHECK(std::abs(gauss_curvature(0.0, sf.data) - K0) < 1e-10 * std::max(1.0, std::abs(K0)));
    const auto c_flat = HyperbolicCoords::from(0.0, c.s, c.t);
    CHECK(std::abs(K0) <= std::abs(center_curvature_closed(c_flat)));
    const CenterData cd = center_data(c);
    const double fuv = center_mixed_derivative(c);
    CHECK(mixed_derivative_from_data(cd.h0_prime, cd.q0, cd.q0_prime) == doctest::Approx(fuv).epsilon(1e-10));
  }
}

TEST_CASE("mixed derivative against finite differences") {
  for (const auto& [m, s, t] : {std::array<double, 3>{0.3, 1.0, 0.3}, {0.3, 1.0, -0.3}, {1.4, 0.3, 0.1}}) {
    const ScherkSurface sf = ScherkSurface::from_params(m, s, t);
    const auto g = center_fd(sf);
    CHECK(g.fuv == doctest::Approx(center_mixed_derivative(sf.coords)).epsilon(1e-4));
    CHECK(testing::dist3(g.upward_normal(), center_normal(sf.coords)) < 1e-4);
  }
  CHECK(center_mixed_derivative(HyperbolicCoords::from(0.3, 1.0, 0.3)) == doctest::Approx(-4.8880889186125804));
  CHECK(center_mixed_derivative(HyperbolicCoords::from(0.5, 40.0, -40.0)) ==
        doctest::Approx(-0.5 * kPi / std::cos(0.5)).epsilon(1e-12));
}

TEST_CASE("aligning rotation") {
  CHECK(aligning_rotation(HyperbolicCoords::from(0.8, 0.6, -0.6)) == doctest::Approx(kPi / 4));
  const auto c = HyperbolicCoords::from(0.3, 1.0, 0.3);
  const double alpha = aligning_rotation(c);
  CHECK(alpha == doctest::Approx(0.87291252738285607).epsilon(1e-12));
  CHECK(std::abs(rotated_mixed_derivative(c, alpha)) < 1e-8);
  CHECK(rotated_mixed_derivative(c, 0.0) == doctest::Approx(center_mixed_derivative(c)).epsilon(1e-14));

  // Off-diagonal entry of the finite-difference Hessian in axes turned by -alpha.
  const ScherkSurface sf = ScherkSurface::from_params(0.3, 1.0, 0.3);
  const auto g = center_fd(sf);
  for (double a : {0.2, alpha, 1.3}) {
    const double ca = std::cos(a), sa = std::sin(a);
    const double off = (g.fuu - g.fvv) * ca * sa + g.fuv * (ca * ca - sa * sa);
    CHECK(off == doctest::Approx(rotated_mixed_derivative(c, a)).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("curvature bound") {
  const PitotQuad q = construct_quad(0.3, 1.0, 0.3);
  const auto c = HyperbolicCoords::from(0.3, 1.0, 0.3);
  CHECK(curvature_bound(q) == doctest::Approx(-center_curvature_closed(c)).epsilon(1e-12));
  std::array<cplx, 4> scaled;
  for (int i = 0; i < 4; ++i) scaled[i] = 3.0 * q.b[i];
  CHECK(curvature_bound(validate_quadrilateral(scaled)) == doctest::Approx(curvature_bound(q) / 9.0).epsilon(1e-12));

  std::mt19937_64 rng(testing::kSweepSeed + 303);
  for (int n = 0; n < 200; ++n) {
    const ScherkSurface sf = ScherkSurface::from_vertices(testing::random_pitot_vertices(rng));
    const double L = std::abs(sf.frame.from_normalized.scale);
    const double Kd = gauss_curvature(0.0, sf.data) / (L * L);
    CHECK(std::abs(Kd) == doctest::Approx(curvature_bound(sf.quad)).epsilon(1e-10));
    CHECK(Kd * L * L == doctest::Approx(gauss_curvature(0.0, sf.data)).epsilon(1e-12));
  }
}
