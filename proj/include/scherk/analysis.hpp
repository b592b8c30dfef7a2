#pragma once

#include "scherk/common.hpp"
#include "scherk/geometry.hpp"
#include "scherk/params.hpp"

namespace scherk {

/// Gaussian curvature of the normalized surface at the preimage point z:
/// -4 |q'|^2 / (|h'|^2 (1 + |q|^2)^4).
double gauss_curvature(cplx z, const ScherkData& d);

/// -(pi^2 / 4) cos^2 m coth^2 j sech^4 k: curvature above the harmonic center, normalized frame.
double center_curvature_closed(const HyperbolicCoords& c);

/// q(0), q'(0) and h'(0) from their closed forms in (m, j, k).
struct CenterData {
  cplx q0;
  cplx q0_prime;
  cplx h0_prime;
};
CenterData center_data(const HyperbolicCoords& c);

/// Unit normal of the surface above the harmonic center, normalized frame:
/// (cos m tanh k, -sin m, cos m sech k).
Vec3 center_normal(const HyperbolicCoords& c);

/// Stereographic lift of q(0): (sin m, -cos m tanh k, cos m sech k).
Vec3 center_gauss_sphere_point(const HyperbolicCoords& c);

/// f_uv at the harmonic center for the graph height = T(f^{-1}), normalized frame:
/// -(pi / 2) coth j sec m.
double center_mixed_derivative(const HyperbolicCoords& c);

/// Mixed derivative of a minimal graph from its Weierstrass data at the preimage of the point:
/// 2 Re[h' (1 - q^4) conj(q')] / (|h'|^2 (1 - |q|^2)^3 (1 + |q|^2)).
double mixed_derivative_from_data(cplx h_prime, cplx q, cplx q_prime);

/// Mixed derivative at the center after rotating the quadrilateral by alpha.
double rotated_mixed_derivative(const HyperbolicCoords& c, double alpha);

/// Smallest nonnegative rotation angle making the rotated mixed derivative vanish.
double aligning_rotation(const HyperbolicCoords& c);

/// pi^2 cos^2 m coth^2 j sech^4 k / |b1 - b3|^2
double curvature_bound(const HyperbolicCoords& c, double focal_distance);
double curvature_bound(const PitotQuad& q);

}  // namespace scherk
