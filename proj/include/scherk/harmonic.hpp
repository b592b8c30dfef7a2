#pragma once

#include <array>

#include "scherk/common.hpp"
#include "scherk/geometry.hpp"
#include "scherk/params.hpp"

namespace scherk {

inline constexpr double kTolPole = 1e-9;

/// Piecewise-constant boundary values on the unit circle. Arc i is
/// [edges[i], edges[i+1]) and carries values[i].
struct StepBoundary {
  std::array<double, 5> edges{};
  std::array<cplx, 4> values{};

  cplx value_at(double theta) const;
};

/// Arcs [0,p), [p,pi), [pi,pi+p), [pi+p,2pi) carry b2, b3, b4, b1.
StepBoundary step_boundary(const ScherkData& d);

/// h'(z) = sum_k h_coeffs[k] / (poles[k] - z), likewise g' with g_coeffs.
/// Poles are 1, e^{ip}, -1, -e^{ip}; the jump at poles[k] is b_k -> b_{k+1}.
struct AnalyticParts {
  std::array<cplx, 4> poles{};
  std::array<cplx, 4> h_coeffs{};
  std::array<cplx, 4> g_coeffs{};
  cplx h0;  // h(0) = f(0); g(0) = 0
};

AnalyticParts analytic_parts(const ScherkData& d);

cplx h_prime(cplx z, const ScherkData& d);
cplx g_prime(cplx z, const ScherkData& d);
/// g'/h'
cplx dilatation(cplx z, const ScherkData& d);

/// Analytic parts h and g with f = h + conj(g), normalized frame.
cplx h_part(cplx z, const AnalyticParts& a);
cplx g_part(cplx z, const AnalyticParts& a);

/// Harmonic map of the disk onto the normalized quadrilateral.
cplx harmonic_map(cplx z, const ScherkData& d);
/// Same map followed by the inverse normalization.
cplx harmonic_map(cplx z, const ScherkData& d, const NormalizedFrame& frame);

/// f(0) = p (z + w) / (2 pi) in the normalized frame, mapped back.
cplx harmonic_center(const ScherkData& d, const NormalizedFrame& frame);
cplx harmonic_center_normalized(const ScherkData& d);

/// |h'|^2 - |g'|^2
double jacobian(cplx z, const ScherkData& d);

}  // namespace scherk
