#include "scherk/harmonic.hpp"

#include <cmath>

namespace scherk {

namespace {

void check_poles(cplx z, const std::array<cplx, 4>& poles) {
  for (const cplx& pole : poles)
    if (std::abs(z - pole) < kTolPole) throw Error(ErrorCode::PoleProximity, "evaluation point too close to a boundary pole");
}

cplx residue_sum(cplx z, const std::array<cplx, 4>& poles, const std::array<cplx, 4>& coeffs) {
  cplx acc = 0.0;
  for (int k = 0; k < 4; ++k) acc += coeffs[k] / (poles[k] - z);
  return acc;
}

cplx log_sum(cplx z, const std::array<cplx, 4>& poles, const std::array<cplx, 4>& coeffs) {
  // 1 - z/pole stays in the disk of radius 1 about 1 for |z| < 1.
  cplx acc = 0.0;
  for (int k = 0; k < 4; ++k) acc -= coeffs[k] * std::log(1.0 - z / poles[k]);
  return acc;
}

}  // namespace

cplx StepBoundary::value_at(double theta) const {
  double th = std::fmod(theta, 2.0 * kPi);
  if (th < 0.0) th += 2.0 * kPi;
  for (int i = 0; i < 4; ++i)
    if (th < edges[i + 1]) return values[i];
  return values[3];
}

StepBoundary step_boundary(const ScherkData& d) {
  const auto& b = d.vertices;
  return {{0.0, d.p, kPi, kPi + d.p, 2.0 * kPi}, {b[1], b[2], b[3], b[0]}};
}

AnalyticParts analytic_parts(const ScherkData& d) {
  const auto& b = d.vertices;
  AnalyticParts a;
  a.poles = {cplx(1.0, 0.0), d.e_ip, cplx(-1.0, 0.0), -d.e_ip};
  const cplx f = kI / (2.0 * kPi);
  for (int k = 0; k < 4; ++k) {
    const cplx jump = b[k] - b[(k + 1) % 4];
    a.h_coeffs[k] = f * jump;
    a.g_coeffs[k] = f * std::conj(jump);
  }
  a.h0 = harmonic_center_normalized(d);
  return a;
}

cplx h_prime(cplx z, const ScherkData& d) {
  const auto a = analytic_parts(d);
  check_poles(z, a.poles);
  return residue_sum(z, a.poles, a.h_coeffs);
}

cplx g_prime(cplx z, const ScherkData& d) {
  const auto a = analytic_parts(d);
  check_poles(z, a.poles);
  return residue_sum(z, a.poles, a.g_coeffs);
}

cplx dilatation(cplx z, const ScherkData& d) {
  const auto a = analytic_parts(d);
  check_poles(z, a.poles);
  return residue_sum(z, a.poles, a.g_coeffs) / residue_sum(z, a.poles, a.h_coeffs);
}

cplx h_part(cplx z, const AnalyticParts& a) { return a.h0 + log_sum(z, a.poles, a.h_coeffs); }

cplx g_part(cplx z, const AnalyticParts& a) { return log_sum(z, a.poles, a.g_coeffs); }

cplx harmonic_map(cplx z, const ScherkData& d) {
  const auto a = analytic_parts(d);
  return h_part(z, a) + std::conj(g_part(z, a));
}

cplx harmonic_map(cplx z, const ScherkData& d, const NormalizedFrame& frame) {
  return frame.from_normalized.apply(harmonic_map(z, d));
}

cplx harmonic_center_normalized(const ScherkData& d) {
  return d.p * (d.vertices[1] + d.vertices[3]) / (2.0 * kPi);
}

cplx harmonic_center(const ScherkData& d, const NormalizedFrame& frame) {
  return frame.from_normalized.apply(harmonic_center_normalized(d));
}

double jacobian(cplx z, const ScherkData& d) {
  const auto a = analytic_parts(d);
  check_poles(z, a.poles);
  return std::norm(residue_sum(z, a.poles, a.h_coeffs)) - std::norm(residue_sum(z, a.poles, a.g_coeffs));
}

}  // namespace scherk
