#pragma once

#include <span>

#include "scherk/geometry.hpp"
#include "scherk/harmonic.hpp"
#include "scherk/params.hpp"
#include "scherk/weierstrass.hpp"

namespace scherk {

/// The full construction for one quadrilateral.
struct ScherkSurface {
  PitotQuad quad;
  NormalizedFrame frame;
  HyperbolicCoords coords;
  ScherkData data;
  AnalyticParts parts;
  HeightKernel kernel;

  static ScherkSurface from_vertices(std::span<const cplx, 4> vertices, double tol_pitot = kDefaultTolPitot);
  /// Quadrilateral (-1, h(m,t), 1, h(m,s)).
  static ScherkSurface from_params(double m, double s, double t);

  cplx map(cplx z) const { return harmonic_map(z, data, frame); }
  Vec3 point(cplx z) const { return surface_point(z, data, kernel, frame); }
};

}  // namespace scherk
