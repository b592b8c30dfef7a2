#include "scherk/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace scherk {

SurfaceMesh sample_disk(const ScherkSurface& surface, const MeshOptions& opt) {
  if (opt.n_r < 2 || opt.n_theta < 8 || !(opt.r_max > 0.0) || opt.r_max > 1.0 - 1e-6 || !(opt.h_max > 0.0))
    throw Error(ErrorCode::InvalidInput, "mesh needs n_r >= 2, n_theta >= 8, 0 < r_max <= 1 - 1e-6, h_max > 0");
  SurfaceMesh mesh;
  const auto& c = surface.coords;
  mesh.metadata = {c.m, c.s, c.t, surface.data.p, opt.h_max, {}};
  const double scale = std::abs(surface.frame.from_normalized.scale);

  auto add_vertex = [&](cplx z) {
    const cplx xy = surface.map(z);
    const double T = height_T(z, surface.kernel);
    const double clamped = std::clamp(T, -opt.h_max, opt.h_max);
    mesh.vertices.push_back({xy.real(), xy.imag(), clamped * scale});
    mesh.preimages.push_back(z);
    mesh.metadata.clamp.push_back(T > opt.h_max ? 1 : (T < -opt.h_max ? -1 : 0));
  };

  add_vertex(0.0);
  for (int i = 1; i <= opt.n_r; ++i) {
    const double r = opt.r_max * std::sin(0.5 * kPi * i / opt.n_r);
    for (int k = 0; k < opt.n_theta; ++k) add_vertex(std::polar(r, 2.0 * kPi * k / opt.n_theta));
  }

  auto idx = [&](int ring, int k) { return 1 + (ring - 1) * opt.n_theta + (k % opt.n_theta); };
  for (int k = 0; k < opt.n_theta; ++k) mesh.faces.push_back({0, idx(1, k), idx(1, k + 1)});
  for (int i = 1; i < opt.n_r; ++i)
    for (int k = 0; k < opt.n_theta; ++k) {
      const int a = idx(i, k), b = idx(i, k + 1), c2 = idx(i + 1, k + 1), d = idx(i + 1, k);
      mesh.faces.push_back({a, d, c2});
      mesh.faces.push_back({a, c2, b});
    }
  return mesh;
}

std::vector<TracePoint> radial_trace(const ScherkSurface& surface, int pole_index, const std::vector<double>& radii) {
  if (pole_index < 1 || pole_index > 4) throw Error(ErrorCode::InvalidInput, "pole index must be in 1..4");
  const cplx zeta = surface.kernel.poles[pole_index - 1];
  std::vector<TracePoint> out;
  out.reserve(radii.size());
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidInput, "trace radius must lie in [0, 1)");
    out.push_back({r, height_T(r * zeta, surface.kernel)});
  }
  return out;
}

std::vector<double> default_trace_radii() {
  std::vector<double> r{0.0};
  constexpr int n = 41;
  for (int i = 0; i < n; ++i) r.push_back(1.0 - std::pow(10.0, -2.0 - 4.0 * i / (n - 1)));
  return r;
}

double fit_log_slope(const std::vector<TracePoint>& trace, double window) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [r, T] : trace) {
    if (1.0 - r > window * (1.0 + 1e-9)) continue;
    const double x = std::log1p(-r);
    sx += x, sy += T, sxx += x * x, sxy += x * T, ++n;
  }
  if (n < 2) throw Error(ErrorCode::InvalidInput, "slope fit needs at least two rows inside the window");
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) throw Error(ErrorCode::DivisionDegenerate, "slope fit has no spread in log(1 - r)");
  return (n * sxy - sx * sy) / den;
}

bool quad_contains(const PitotQuad& quad, cplx x, double tol) {
  bool inside = false;
  double dist = INFINITY;
  for (int i = 0; i < 4; ++i) {
    const cplx a = quad.b[i], b = quad.b[(i + 1) % 4], e = b - a;
    if ((a.imag() > x.imag()) != (b.imag() > x.imag()) &&
        x.real() < a.real() + (x.imag() - a.imag()) * e.real() / e.imag())
      inside = !inside;
    const double tpar = std::clamp(((x - a) * std::conj(e)).real() / std::norm(e), 0.0, 1.0);
    dist = std::min(dist, std::abs(x - (a + tpar * e)));
  }
  return inside || dist <= tol;
}

void export_obj(const SurfaceMesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  char buf[256];
  const auto& md = mesh.metadata;
  std::snprintf(buf, sizeof buf, "# scherk m=%.17g s=%.17g t=%.17g p=%.17g h_max=%.17g\n", md.m, md.s, md.t, md.p, md.h_max);
  out << buf;
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << buf;
  }
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

SurfaceMesh read_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  SurfaceMesh mesh;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vec3 v;
      ls >> v[0] >> v[1] >> v[2];
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> f;
      ls >> f[0] >> f[1] >> f[2];
      for (int& i : f) --i;
      mesh.faces.push_back(f);
    } else {
      continue;
    }
    if (ls.fail()) throw Error(ErrorCode::IoError, "malformed OBJ line: " + line);
  }
  return mesh;
}

void export_csv(const std::vector<TracePoint>& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << "r,T\n";
  char buf[80];
  for (const auto& [r, T] : trace) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r, T);
    out << buf;
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace scherk
