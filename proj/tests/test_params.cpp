#include <doctest.h>

#include <cmath>

#include "scherk/harmonic.hpp"
#include "scherk/params.hpp"
#include "support.hpp"

using namespace scherk;

TEST_CASE("angle parameter for (0.3, 1, 0.3)") {
  const auto ap = angle_parameter(HyperbolicCoords::from(0.3, 1.0, 0.3));
  CHECK(std::cos(ap.p) == doctest::Approx(-0.77370298634487233).epsilon(1e-14));
  CHECK(ap.p == doctest::Approx(2.4554616339854149).epsilon(1e-14));
  CHECK(std::abs(std::arg(ap.e_ip) - ap.p) < 1e-12);
}

TEST_CASE("angle parameter limits") {
  const auto mid = angle_parameter(HyperbolicCoords::from(0.4, std::acosh(3.0), 0.0));
  CHECK(mid.p == doctest::Approx(kPi / 2).epsilon(1e-14));
  const auto wide = angle_parameter(HyperbolicCoords::from(0.4, 40.0, 0.0));
  CHECK(wide.p < 1e-8);
  CHECK_THROWS_AS(angle_parameter(HyperbolicCoords::from(0.4, 1.0, 1.0)), Error);
}

TEST_CASE("vertex form of cos p") {
  const cplx z = hyperbola_point(0.3, 0.3), w = hyperbola_point(0.3, 1.0);
  CHECK(vertex_form_E(z, w) == doctest::Approx(-0.77370298634487233).epsilon(1e-12));
  try {
    vertex_form_E(std::conj(w), w);
    FAIL("expected DivisionDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionDegenerate);
  }
}

TEST_CASE("Moebius center modulus") {
  CHECK(moebius_center_modulus(HyperbolicCoords::from(kPi / 3, 0.5, -0.5)) == doctest::Approx(std::sqrt(1.0 / 3.0)));
  const auto c = HyperbolicCoords::from(0.3, 1.0, 0.3);
  const cplx z0 = moebius_center(c);
  CHECK(z0.real() == doctest::Approx(-0.020206155187158459).epsilon(1e-13));
  CHECK(z0.imag() == doctest::Approx(0.34751944355239528).epsilon(1e-13));
  const double ratio = (std::cosh(0.65) - std::cos(0.3)) / (std::cosh(0.65) + std::cos(0.3));
  CHECK(std::norm(z0) == doctest::Approx(ratio).epsilon(1e-13));
}

TEST_CASE("unimodular factor for (0.3, 1, 0.3)") {
  const auto c = HyperbolicCoords::from(0.3, 1.0, 0.3);
  const auto uf = unimodular_factor(c);
  CHECK(std::abs(std::abs(uf.X) - 1.0) < 1e-15);
  CHECK(std::abs(uf.sqrtX * uf.sqrtX - uf.X) < 1e-15);
  const auto ap = angle_parameter(c);
  CHECK(std::abs(unimodular_factor_from_vertices(hyperbola_point(0.3, 0.3), hyperbola_point(0.3, 1.0), ap.p) - uf.X) < 1e-10);
}

TEST_CASE("Weierstrass constants for (0.3, 1, 0.3)") {
  const ScherkData d = make_scherk_data(HyperbolicCoords::from(0.3, 1.0, 0.3));
  CHECK(std::abs(d.C - cplx(-0.36021705965622819, 0.29496457706799106)) < 1e-13);
  CHECK(std::abs(d.B - cplx(-0.20114641529543437, 0.4198815921257732)) < 1e-13);
  CHECK(std::abs(d.A - d.B * d.Z) < 1e-15);
  CHECK(std::abs(d.C * d.C - d.B * d.B * d.Z) < 1e-13);
  CHECK(std::abs(h_prime(0.0, d) - d.B / (d.e_ip * d.e_ip)) < 1e-13);
  CHECK(std::abs(h_prime_at_zero_closed(d.coords) - h_prime(0.0, d)) < 1e-13);
}

TEST_CASE("sweep: closed forms against each other") {
  std::mt19937_64 rng(testing::kSweepSeed);
  int vertex_checks = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto [m, s, t] = random_params(rng);
    const auto c = HyperbolicCoords::from(m, std::max(s, t), std::min(s, t));
    const ScherkData d = make_scherk_data(c);
    const auto ap = angle_parameter(c);
    CHECK(std::cos(ap.p) == doctest::Approx(rapidity_cosine(c.s - c.t)).epsilon(1e-12));
    CHECK(std::abs(exp_ip_from_half_gap(c.j) - ap.e_ip) < 1e-12);
    CHECK(ap.p > 0.0);
    CHECK(ap.p < kPi);
    CHECK(std::abs(std::abs(d.X) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(d.z0) - moebius_center_modulus(c)) < 1e-12);
    CHECK(std::abs(d.z0) < 1.0);
    const cplx z = d.vertices[1], w = d.vertices[3];
    CHECK(std::abs(moebius_center_from_vertices(z, w, d.e_ip) - d.z0) < 1e-10 * std::max(1.0, std::abs(w)));
    const cplx Xraw = unimodular_factor_from_vertices(z, w, d.p);
    CHECK(std::abs(Xraw - d.X) < 1e-10 * std::max(1.0, std::norm(w)));
    const cplx rhs = key_identity_rhs(c);
    CHECK(std::abs(d.C / (d.e_ip * d.e_ip - 1.0) - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(d.A / d.B - d.Z) < 1e-12);
    CHECK(std::abs(d.C * d.C - d.B * d.B * d.Z) < 1e-12 * std::norm(d.B));
    try {
      CHECK(std::abs(vertex_form_E(z, w) - std::cos(d.p)) < 1e-10);
      ++vertex_checks;
    } catch (const Error&) {
    }
  }
  CHECK(vertex_checks > 900);
}

TEST_CASE("quadratic route to cos p") {
  // A cos 2p + B cos p + C = 0 from the imaginary part of the perfect-square condition.
  for (const auto& [m, s, t] : {std::array<double, 3>{0.3, 1.0, 0.3}, {0.9, 0.2, -1.4}, {1.2, 2.0, 1.1}}) {
    const std::array<cplx, 4> b{cplx(-1.0, 0.0), hyperbola_point(m, t), cplx(1.0, 0.0), hyperbola_point(m, s)};
    const double u1 = b[0].real(), u2 = b[1].real(), u3 = b[2].real(), u4 = b[3].real();
    const double v1 = b[0].imag(), v2 = b[1].imag(), v3 = b[2].imag(), v4 = b[3].imag();
    const double A = 2.0 * (u1 - u2 + u3 - u4) * (v1 - v2 + v3 - v4);
    const double B = 4.0 * ((u1 + u2 - u3 - u4) * (v1 - v2 - v3 + v4) + (u1 - u2 - u3 + u4) * (v1 + v2 - v3 - v4));
    const double C = 6.0 * (u1 * v1 + u2 * v2 + u3 * v3 + u4 * v4) + 2.0 * ((u2 * v3 + u3 * v2) - 5.0 * (u2 * v4 + u4 * v2)) +
                     2.0 * (u3 * v4 + u4 * v3) + 2.0 * ((u1 * v2 + u2 * v1) - 5.0 * (u1 * v3 + u3 * v1) + (u1 * v4 + u4 * v1));
    CHECK(std::abs(A + B + C) < 1e-12 * (std::abs(A) + std::abs(B)));
    const double E = rapidity_cosine(std::abs(s - t));
    CHECK(-1.0 - B / (2.0 * A) == doctest::Approx(E).epsilon(1e-12));
    CHECK(A * std::cos(2.0 * std::acos(E)) + B * E + C == doctest::Approx(0.0).epsilon(1e-10).scale(std::abs(A)));
  }
}
