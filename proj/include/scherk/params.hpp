#pragma once

#include <array>

#include "scherk/common.hpp"
#include "scherk/geometry.hpp"

namespace scherk {

/// Everything needed to evaluate h', g', q, K and T in the normalized frame.
struct ScherkData {
  HyperbolicCoords coords;
  double p = 0.0;  // arc parameter in (0, pi)
  cplx e_ip;       // exp(i p)
  cplx z0;         // zero of the Moebius Gauss map, |z0| < 1
  cplx X;          // unimodular factor of the dilatation
  cplx sqrtX;      // root of X fixed by the residue sign rule
  cplx B, Z, A, C;
  std::array<cplx, 4> vertices;  // (-1, z, 1, w) rebuilt from coords
};

struct AngleParameter {
  double p;
  cplx e_ip;
};

/// cos p = 1 - 4 / (1 + cosh(s - t)).
double rapidity_cosine(double s_minus_t);
AngleParameter angle_parameter(const HyperbolicCoords& c);

/// (i + e^j)^2 / (i - e^j)^2, which equals exp(i p) for j > 0.
cplx exp_ip_from_half_gap(double j);

/// Cosine of p from vertex coordinates, z = x + iy at rapidity t and w = u + iv at rapidity s.
double vertex_form_E(cplx z, cplx w);

cplx moebius_center(const HyperbolicCoords& c);
/// Vertex-coordinate expression of z0 for the normalized quadrilateral.
cplx moebius_center_from_vertices(cplx z, cplx w, cplx e_ip);
/// |z0| = sqrt((cosh k - cos m) / (cosh k + cos m)).
double moebius_center_modulus(const HyperbolicCoords& c);

struct UnimodularFactor {
  cplx X;
  cplx sqrtX;  // principal root
};
UnimodularFactor unimodular_factor(const HyperbolicCoords& c);
cplx unimodular_factor_from_vertices(cplx z, cplx w, double p);

struct WeierstrassConstants {
  cplx B, Z, A, C;
  cplx sqrtX;  // root actually used, C = B * sqrtX
};

/// Applies the residue sign rule: the root of X is chosen so that K has residue
/// +i * (positive) at z = 1.
WeierstrassConstants weierstrass_constants(const HyperbolicCoords& c, const AngleParameter& ap, cplx z0);

/// h'(0) in closed form, equal to B exp(-2ip).
cplx h_prime_at_zero_closed(const HyperbolicCoords& c);

/// Right-hand side of C / (exp(2ip) - 1) = -i cosh j (cos m + cosh k) / (2 pi).
cplx key_identity_rhs(const HyperbolicCoords& c);

ScherkData make_scherk_data(const HyperbolicCoords& c);

/// Moebius automorphism (z - z0) / (1 - z conj(z0)).
inline cplx moebius_phi(cplx z, cplx z0) { return (z - z0) / (1.0 - z * std::conj(z0)); }

}  // namespace scherk
