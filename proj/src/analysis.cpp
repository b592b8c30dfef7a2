#include "scherk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scherk/harmonic.hpp"
#include "scherk/weierstrass.hpp"

namespace scherk {

double gauss_curvature(cplx z, const ScherkData& d) {
  const cplx hp = h_prime(z, d);
  const cplx q = gauss_map_q(z, d);
  const cplx qp = gauss_map_q_prime(z, d);
  const double a = 1.0 + std::norm(q);
  return -4.0 * std::norm(qp) / (std::norm(hp) * a * a * a * a);
}

double center_curvature_closed(const HyperbolicCoords& c) {
  const double cm = std::cos(c.m), cothj = 1.0 / std::tanh(c.j), sechk = 1.0 / std::cosh(c.k);
  return -0.25 * kPi * kPi * cm * cm * cothj * cothj * sechk * sechk * sechk * sechk;
}

CenterData center_data(const HyperbolicCoords& c) {
  const cplx km(c.k, -c.m), kp(c.k, c.m);
  const double ej = std::exp(c.j);
  const cplx sech_half = 1.0 / std::cosh(0.5 * km);
  CenterData cd;
  cd.q0 = -kI * sech_half * std::sinh(0.5 * kp);
  cd.q0_prime = (1.0 + kI * ej) * std::cos(c.m) / (kI + ej) * sech_half * sech_half;
  const cplx den = (kI + ej) * (kI + ej) * kPi;
  cd.h0_prime = -2.0 * kI * (std::exp(2.0 * c.j) - 1.0) * (1.0 + std::cosh(km)) / den;
  return cd;
}

Vec3 center_normal(const HyperbolicCoords& c) {
  const double cm = std::cos(c.m);
  return {cm * std::tanh(c.k), -std::sin(c.m), cm / std::cosh(c.k)};
}

Vec3 center_gauss_sphere_point(const HyperbolicCoords& c) {
  const double cm = std::cos(c.m);
  return {std::sin(c.m), -cm * std::tanh(c.k), cm / std::cosh(c.k)};
}

double center_mixed_derivative(const HyperbolicCoords& c) {
  return -0.5 * kPi / (std::tanh(c.j) * std::cos(c.m));
}

double mixed_derivative_from_data(cplx h_prime, cplx q, cplx q_prime) {
  const double a = std::norm(q);
  const double one_minus = 1.0 - a;
  const cplx q2 = q * q;
  const double num = 2.0 * (h_prime * (1.0 - q2 * q2) * std::conj(q_prime)).real();
  return num / (std::norm(h_prime) * one_minus * one_minus * one_minus * (1.0 + a));
}

double rotated_mixed_derivative(const HyperbolicCoords& c, double alpha) {
  const double cm = std::cos(c.m);
  const double bracket = std::exp(c.k) * std::cos(2.0 * alpha - c.m) + std::exp(-c.k) * std::cos(2.0 * alpha + c.m);
  return -kPi * std::cosh(c.j) * bracket / (4.0 * std::sinh(c.j) * cm * cm * std::cosh(c.k));
}

double aligning_rotation(const HyperbolicCoords& c) {
  const double radial = std::sin(c.m) * std::sinh(c.k) / (std::sqrt(2.0) * std::sqrt(std::cos(2.0 * c.m) + std::cosh(2.0 * c.k)));
  const double scale = std::max(1.0, std::abs(rotated_mixed_derivative(c, 0.0)));
  double best = std::numeric_limits<double>::infinity();
  for (double s3 : {1.0, -1.0}) {
    const double inner = 0.5 + s3 * radial;
    if (inner < 0.0) continue;
    for (double s2 : {1.0, -1.0}) {
      const double arg = std::clamp(s2 * std::sqrt(inner), -1.0, 1.0);
      for (double s1 : {1.0, -1.0}) {
        const double alpha = s1 * std::acos(arg);
        if (alpha < 0.0) continue;
        if (std::abs(rotated_mixed_derivative(c, alpha)) < 1e-8 * scale && alpha < best) best = alpha;
      }
    }
  }
  if (!std::isfinite(best)) throw Error(ErrorCode::NoRootFound, "no sign choice zeroes the rotated mixed derivative");
  return best;
}

double curvature_bound(const HyperbolicCoords& c, double focal_distance) {
  return -4.0 * center_curvature_closed(c) / (focal_distance * focal_distance);
}

double curvature_bound(const PitotQuad& q) {
  const NormalizedFrame frame = normalize(q);
  const auto b = frame.construction_vertices(q);
  return curvature_bound(hyperbolic_coordinates(frame.z, frame.w), std::abs(b[0] - b[2]));
}

}  // namespace scherk
