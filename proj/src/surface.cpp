#include "scherk/surface.hpp"

namespace scherk {

namespace {

ScherkSurface assemble(const PitotQuad& quad, const NormalizedFrame& frame, const HyperbolicCoords& coords) {
  ScherkSurface out;
  out.quad = quad;
  out.frame = frame;
  out.coords = coords;
  out.data = make_scherk_data(coords);
  out.parts = analytic_parts(out.data);
  out.kernel = height_kernel(out.data);
  return out;
}

}  // namespace

ScherkSurface ScherkSurface::from_vertices(std::span<const cplx, 4> vertices, double tol_pitot) {
  const PitotQuad quad = validate_quadrilateral(vertices, tol_pitot);
  const NormalizedFrame frame = normalize(quad);
  return assemble(quad, frame, hyperbolic_coordinates(frame.z, frame.w));
}

ScherkSurface ScherkSurface::from_params(double m, double s, double t) {
  const PitotQuad quad = construct_quad(m, s, t);
  const NormalizedFrame frame = normalize(quad);
  if (s > t && frame.label_shift == 0) return assemble(quad, frame, HyperbolicCoords::from(m, s, t));
  return assemble(quad, frame, hyperbolic_coordinates(frame.z, frame.w));
}

}  // namespace scherk
