#include "scherk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scherk {

namespace {

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Proper or touching intersection of closed segments [p1,p2] and [q1,q2].
bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2, double eps) {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  auto sgn = [eps](double x) { return x > eps ? 1 : (x < -eps ? -1 : 0); };
  const int s1 = sgn(d1), s2 = sgn(d2), s3 = sgn(d3), s4 = sgn(d4);
  if (s1 * s2 < 0 && s3 * s4 < 0) return true;
  auto on_segment = [eps](cplx a, cplx b, cplx x) {
    return std::min(a.real(), b.real()) - eps <= x.real() && x.real() <= std::max(a.real(), b.real()) + eps &&
           std::min(a.imag(), b.imag()) - eps <= x.imag() && x.imag() <= std::max(a.imag(), b.imag()) + eps;
  };
  if (s1 == 0 && on_segment(p1, p2, q1)) return true;
  if (s2 == 0 && on_segment(p1, p2, q2)) return true;
  if (s3 == 0 && on_segment(q1, q2, p1)) return true;
  if (s4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

}  // namespace

double signed_area(std::span<const cplx, 4> v) {
  double a = 0.0;
  for (int i = 0; i < 4; ++i) a += cross(v[i], v[(i + 1) % 4]);
  return 0.5 * a;
}

double pitot_residual(std::span<const cplx, 4> v) {
  return std::abs(v[0] - v[1]) + std::abs(v[2] - v[3]) - std::abs(v[1] - v[2]) - std::abs(v[3] - v[0]);
}

PitotQuad validate_quadrilateral(std::span<const cplx, 4> vertices, double tol_pitot) {
  for (const cplx& b : vertices) {
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
      throw Error(ErrorCode::InvalidInput, "vertex coordinates must be finite");
  }
  double perimeter = 0.0;
  for (int i = 0; i < 4; ++i) perimeter += std::abs(vertices[i] - vertices[(i + 1) % 4]);
  if (!(perimeter > 0.0)) throw Error(ErrorCode::DegenerateVertices, "all vertices coincide");

  const double eps_len = 1e-12 * perimeter;
  for (int i = 0; i < 4; ++i)
    for (int k = i + 1; k < 4; ++k)
      if (std::abs(vertices[i] - vertices[k]) <= eps_len) {
        std::ostringstream os;
        os << "vertices b" << i + 1 << " and b" << k + 1 << " coincide";
        throw Error(ErrorCode::DegenerateVertices, os.str());
      }

  const double eps_area = 1e-14 * perimeter * perimeter;
  if (segments_intersect(vertices[0], vertices[1], vertices[2], vertices[3], eps_area) ||
      segments_intersect(vertices[1], vertices[2], vertices[3], vertices[0], eps_area))
    throw Error(ErrorCode::SelfIntersecting, "polygon b1 b2 b3 b4 is not simple");

  const double area = signed_area(vertices);
  if (std::abs(area) <= eps_area) throw Error(ErrorCode::ZeroArea, "polygon has zero area");

  PitotQuad q;
  q.perimeter = perimeter;
  if (area > 0.0) {
    std::copy(vertices.begin(), vertices.end(), q.b.begin());
  } else {
    q.b = {vertices[0], vertices[3], vertices[2], vertices[1]};
    q.reversed = true;
  }
  q.pitot_residual = pitot_residual(q.b);
  if (std::abs(q.pitot_residual) > tol_pitot * perimeter) {
    std::ostringstream os;
    os.precision(3);
    os << "opposite side sums differ by " << q.pitot_residual << " (allowed " << tol_pitot * perimeter << ")";
    throw Error(ErrorCode::NotPitot, os.str());
  }
  return q;
}

std::array<cplx, 4> NormalizedFrame::construction_vertices(const PitotQuad& q) const {
  std::array<cplx, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = q.b[(i + label_shift) % 4];
  return out;
}

double focal_parameter(cplx x) { return 0.5 * (std::abs(x + 1.0) - std::abs(x - 1.0)); }

NormalizedFrame normalize(const PitotQuad& q) {
  auto frame_for = [&q](int shift) {
    NormalizedFrame f;
    f.label_shift = shift;
    const auto b = f.construction_vertices(q);
    f.to_normalized = Similarity{2.0 / (b[2] - b[0]), 0.5 * (b[0] + b[2])};
    f.from_normalized = f.to_normalized.inverse();
    f.z = f.to_normalized.apply(b[1]);
    f.w = f.to_normalized.apply(b[3]);
    return f;
  };
  NormalizedFrame f = frame_for(0);
  // z, w on the left branch: swap the roles of the focal pair (rotation by pi).
  if (focal_parameter(f.z) + focal_parameter(f.w) < 0.0) f = frame_for(2);
  return f;
}

HyperbolicCoords hyperbolic_coordinates(cplx z, cplx w, double tol) {
  const double kz = focal_parameter(z);
  const double kw = focal_parameter(w);
  if (std::abs(kz - kw) > tol * (1.0 + std::abs(z) + std::abs(w)))
    throw Error(ErrorCode::OffHyperbola, "z and w do not lie on a common focal hyperbola");
  double kappa = 0.5 * (kz + kw);
  if (kappa < -tol) throw Error(ErrorCode::WrongBranch, "z and w lie on the left branch; relabel the vertices");
  if (kappa < tol) kappa = 0.0;
  const double m = std::asin(std::min(kappa, 1.0));
  const double cm = std::cos(m);
  if (cm < tol) throw Error(ErrorCode::DegenerateRightAngle, "focal hyperbola collapses onto the real axis");

  const double t = std::asinh(z.imag() / cm);
  const double s = std::asinh(w.imag() / cm);
  if (std::abs(s - t) < 1e-9) throw Error(ErrorCode::EqualRapidities, "z and w have equal rapidities");

  const double rt = std::max(std::abs(hyperbola_point(m, t) - z) / (1.0 + std::abs(z)),
                             std::abs(hyperbola_point(m, s) - w) / (1.0 + std::abs(w)));
  if (rt > std::max(1e-6, tol)) throw Error(ErrorCode::OffHyperbola, "hyperbolic coordinates do not reproduce z and w");
  return HyperbolicCoords::from(m, s, t);
}

cplx hyperbola_point(double m, double tau) {
  return {std::sin(m) * std::cosh(tau), std::cos(m) * std::sinh(tau)};
}

PitotQuad construct_quad(double m, double s, double t) {
  if (!(m >= 0.0 && m < 0.5 * kPi)) throw Error(ErrorCode::InvalidInput, "m must lie in [0, pi/2)");
  if (std::abs(s - t) < 1e-9) throw Error(ErrorCode::EqualRapidities, "s and t must differ");
  const std::array<cplx, 4> v{cplx(-1.0, 0.0), hyperbola_point(m, t), cplx(1.0, 0.0), hyperbola_point(m, s)};
  return validate_quadrilateral(v, 1e-12);
}

}  // namespace scherk
