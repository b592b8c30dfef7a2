#pragma once

#include <array>
#include <string>
#include <vector>

#include "scherk/common.hpp"
#include "scherk/surface.hpp"

namespace scherk {

struct MeshMetadata {
  double m = 0.0, s = 0.0, t = 0.0, p = 0.0;
  double h_max = 5.0;  // clamp height, normalized units
  std::vector<int> clamp;  // per vertex: +1 clamped above, -1 below, 0 free
};

struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based
  std::vector<cplx> preimages;            // disk point of each vertex
  MeshMetadata metadata;
};

struct MeshOptions {
  int n_r = 48;
  int n_theta = 128;
  double r_max = 0.999;
  double h_max = 5.0;
};

/// Polar sampling of the disk: a center vertex plus n_r rings of n_theta points,
/// radii r_max sin(pi i / (2 n_r)).
SurfaceMesh sample_disk(const ScherkSurface& surface, const MeshOptions& opt = {});

struct TracePoint {
  double r;
  double T;  // normalized height
};

/// T(r zeta) toward poles[pole_index - 1], pole_index in 1..4.
std::vector<TracePoint> radial_trace(const ScherkSurface& surface, int pole_index, const std::vector<double>& radii);

/// 0 followed by 41 radii with 1 - r log-spaced in [1e-6, 1e-2].
std::vector<double> default_trace_radii();

/// Least-squares slope of T against log(1 - r) over the rows with 1 - r <= window.
double fit_log_slope(const std::vector<TracePoint>& trace, double window = 1e-2);

/// Closed quadrilateral containment, tolerance measured as distance to the boundary.
bool quad_contains(const PitotQuad& quad, cplx x, double tol);

void export_obj(const SurfaceMesh& mesh, const std::string& path);
/// Vertices and faces only.
SurfaceMesh read_obj(const std::string& path);
void export_csv(const std::vector<TracePoint>& trace, const std::string& path);

}  // namespace scherk
