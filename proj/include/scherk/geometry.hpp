#pragma once

#include <array>
#include <span>

#include "scherk/common.hpp"

namespace scherk {

/// A validated quadrilateral satisfying |b1b2| + |b3b4| = |b2b3| + |b4b1|.
/// Vertices are stored counterclockwise.
struct PitotQuad {
  std::array<cplx, 4> b{};
  double pitot_residual = 0.0;  // |b1b2| + |b3b4| - |b2b3| - |b4b1|
  double perimeter = 0.0;
  bool reversed = false;  // input was clockwise and got reordered to (b1, b4, b3, b2)
};

/// u -> scale * (u - shift)
struct Similarity {
  cplx scale{1.0, 0.0};
  cplx shift{0.0, 0.0};

  cplx apply(cplx u) const { return scale * (u - shift); }
  Similarity inverse() const { return {1.0 / scale, -scale * shift}; }
};

/// Similarity sending the focal pair to -1 and 1, and the images of the other two
/// vertices. Construction vertex i is input vertex (i + label_shift) % 4.
struct NormalizedFrame {
  Similarity to_normalized;
  Similarity from_normalized;
  cplx z;  // image of the second construction vertex
  cplx w;  // image of the fourth construction vertex
  int label_shift = 0;

  /// Input vertices relabelled into construction order.
  std::array<cplx, 4> construction_vertices(const PitotQuad& q) const;
};

/// Position on the focal hyperbola |x+1| - |x-1| = 2 sin m:
/// x = sin m cosh tau, y = cos m sinh tau.
struct HyperbolicCoords {
  double m = 0.0;
  double s = 0.0;  // rapidity of w
  double t = 0.0;  // rapidity of z
  double j = 0.0;  // (s - t) / 2
  double k = 0.0;  // (s + t) / 2

  static HyperbolicCoords from(double m, double s, double t) { return {m, s, t, 0.5 * (s - t), 0.5 * (s + t)}; }
};

inline constexpr double kDefaultTolPitot = 1e-9;
inline constexpr double kTolFocal = 1e-8;

PitotQuad validate_quadrilateral(std::span<const cplx, 4> vertices, double tol_pitot = kDefaultTolPitot);

double signed_area(std::span<const cplx, 4> v);
double pitot_residual(std::span<const cplx, 4> v);

NormalizedFrame normalize(const PitotQuad& q);

/// Half the focal distance difference, (|x+1| - |x-1|) / 2.
double focal_parameter(cplx x);

HyperbolicCoords hyperbolic_coordinates(cplx z, cplx w, double tol = kTolFocal);

cplx hyperbola_point(double m, double tau);

/// Q(-1, h(m,t), 1, h(m,s)), reoriented counterclockwise.
PitotQuad construct_quad(double m, double s, double t);

}  // namespace scherk
