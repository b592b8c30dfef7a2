#include "scherk/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scherk::oracles {

namespace {

constexpr std::array<double, 8> kXgk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                     0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                     0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                     0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                     0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                     0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                     0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T, typename F>
std::pair<T, double> gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const T sum = f(c - dx) + f(c + dx);
    kron += sum * kWgk[i];
    if (i % 2 == 1) gauss += sum * kWg[i / 2];
  }
  return {kron * h, std::abs((kron - gauss) * h)};
}

template <typename T, typename F>
T adaptive(const F& f, double a, double b, double tol, int depth, const QuadratureConfig& cfg) {
  const auto [value, err] = gk15<T>(f, a, b);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
  if (err <= std::max(tol, floor)) return value;
  if (depth >= cfg.max_depth) throw Error(ErrorCode::ToleranceNotMet, "adaptive quadrature exhausted its depth budget");
  const double c = 0.5 * (a + b);
  return adaptive<T>(f, a, c, 0.5 * tol, depth + 1, cfg) + adaptive<T>(f, c, b, 0.5 * tol, depth + 1, cfg);
}

}  // namespace

PanelEstimate gauss_kronrod_panel(const RealFn& f, double a, double b) {
  const auto [value, err] = gk15<double>(f, a, b);
  return {value, err};
}

double integrate(const RealFn& f, double a, double b, const QuadratureConfig& cfg) {
  return adaptive<double>(f, a, b, cfg.abs_tol, 0, cfg);
}

cplx integrate(const ComplexFn& f, double a, double b, const QuadratureConfig& cfg) {
  return adaptive<cplx>(f, a, b, cfg.abs_tol, 0, cfg);
}

cplx poisson_extension(cplx z, const StepBoundary& boundary, const QuadratureConfig& cfg) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::InvalidInput, "Poisson extension needs |z| < 1");
  const double r2 = std::norm(z);
  const RealFn kernel = [z, r2](double theta) { return (1.0 - r2) / std::norm(std::polar(1.0, theta) - z); };
  cplx acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += boundary.values[i] * integrate(kernel, boundary.edges[i], boundary.edges[i + 1], cfg);
  return acc / (2.0 * kPi);
}

cplx contour_integral(std::span<const cplx> path, const Kernel& kernel, const QuadratureConfig& cfg) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const cplx a = path[i], d = path[i + 1] - path[i];
    acc += integrate(ComplexFn([&](double tau) { return kernel(a + tau * d) * d; }), 0.0, 1.0, cfg);
  }
  return acc;
}

double contour_height(cplx z, const Kernel& kernel, const QuadratureConfig& cfg) {
  const std::array<cplx, 2> path{cplx(0.0, 0.0), z};
  return 2.0 * contour_integral(path, kernel, cfg).imag();
}

cplx numeric_residue(const Kernel& kernel, cplx pole, int n_angles, double eps_coarse, double eps_fine) {
  auto circle_mean = [&](double eps) {
    cplx acc = 0.0;
    for (int i = 0; i < n_angles; ++i) {
      const cplx step = std::polar(eps, 2.0 * kPi * (i + 0.5) / n_angles);
      acc += kernel(pole + step) * step;
    }
    return acc / static_cast<double>(n_angles);
  };
  const cplx coarse = circle_mean(eps_coarse), fine = circle_mean(eps_fine);
  const double a2 = eps_coarse * eps_coarse, b2 = eps_fine * eps_fine;
  return (a2 * fine - b2 * coarse) / (a2 - b2);
}

double fd_laplacian(const std::function<double(cplx)>& field, cplx z, double h, double domain_radius) {
  if (std::abs(z) + h >= domain_radius) throw Error(ErrorCode::StencilOutOfDomain, "Laplacian stencil leaves the domain");
  const double c = field(z);
  return (field(z + h) + field(z - h) + field(z + cplx(0.0, h)) + field(z - cplx(0.0, h)) - 4.0 * c) / (h * h);
}

double fd_mixed(const std::function<double(double, double)>& fn, double u, double v, double h) {
  return (fn(u + h, v + h) - fn(u + h, v - h) - fn(u - h, v + h) + fn(u - h, v - h)) / (4.0 * h * h);
}

double GraphDerivatives::curvature() const {
  const double w = 1.0 + fu * fu + fv * fv;
  return (fuu * fvv - fuv * fuv) / (w * w);
}

Vec3 GraphDerivatives::upward_normal() const {
  const double w = std::sqrt(1.0 + fu * fu + fv * fv);
  return {-fu / w, -fv / w, 1.0 / w};
}

GraphDerivatives fd_graph_derivatives(const std::function<double(double, double)>& fn, double u, double v, double h) {
  const double c = fn(u, v);
  const double e = fn(u + h, v), wv = fn(u - h, v), n = fn(u, v + h), s = fn(u, v - h);
  GraphDerivatives g;
  g.fu = (e - wv) / (2.0 * h);
  g.fv = (n - s) / (2.0 * h);
  g.fuu = (e - 2.0 * c + wv) / (h * h);
  g.fvv = (n - 2.0 * c + s) / (h * h);
  g.fuv = fd_mixed(fn, u, v, h);
  return g;
}

GraphDerivatives fd_graph_derivatives_extrapolated(const std::function<double(double, double)>& fn, double u, double v,
                                                   double h) {
  const GraphDerivatives a = fd_graph_derivatives(fn, u, v, h), b = fd_graph_derivatives(fn, u, v, 0.5 * h);
  auto mix = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };
  return {mix(a.fu, b.fu), mix(a.fv, b.fv), mix(a.fuu, b.fuu), mix(a.fvv, b.fvv), mix(a.fuv, b.fuv)};
}

namespace {

bool newton_from(const std::function<cplx(cplx)>& map, const std::function<std::pair<cplx, cplx>(cplx)>& derivs,
                 cplx target, cplx& z, double tol, int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    const cplx r = target - map(z);
    const bool converged = std::abs(r) <= tol;
    const auto [a, b] = derivs(z);
    // a dz + conj(b dz) = r
    const double det = std::norm(a) - std::norm(b);
    if (!(det > 0.0)) return false;
    cplx dz = (std::conj(a) * r - std::conj(b) * std::conj(r)) / det;
    while (std::abs(z + dz) >= 1.0) dz *= 0.5;
    if (converged) {
      // one polishing step past the tolerance
      if (std::abs(target - map(z + dz)) <= std::abs(r)) z += dz;
      return true;
    }
    z += dz;
    if (std::abs(dz) <= 1e-3 * tol) return std::abs(target - map(z)) <= 10.0 * tol;
  }
  return std::abs(target - map(z)) <= tol;
}

}  // namespace

cplx newton_invert(const std::function<cplx(cplx)>& map, const std::function<std::pair<cplx, cplx>(cplx)>& derivs,
                   cplx target, cplx seed, double tol, int max_iter) {
  cplx z = seed;
  if (newton_from(map, derivs, target, z, tol, max_iter)) return z;
  // Fallback: best point of a coarse polar grid.
  cplx best = 0.0;
  double best_err = std::abs(map(best) - target);
  for (int i = 1; i <= 40; ++i)
    for (int k = 0; k < 64; ++k) {
      const cplx c = std::polar(0.99 * i / 40.0, 2.0 * kPi * k / 64.0);
      const double err = std::abs(map(c) - target);
      if (err < best_err) best_err = err, best = c;
    }
  z = best;
  if (newton_from(map, derivs, target, z, tol, max_iter)) return z;
  throw Error(ErrorCode::NewtonDiverged, "Newton inversion of the harmonic map did not converge");
}

namespace {

double arg_increment(cplx a, cplx b, cplx point) { return std::arg((b - point) / (a - point)); }

double refine_arg(const ComplexFn& curve, cplx point, double t0, double t1, cplx c0, cplx c1, int depth) {
  const double inc = arg_increment(c0, c1, point);
  if (std::abs(inc) < 0.5 || depth > 60) return inc;
  const double tm = 0.5 * (t0 + t1);
  const cplx cm = curve(tm);
  return refine_arg(curve, point, t0, tm, c0, cm, depth + 1) + refine_arg(curve, point, tm, t1, cm, c1, depth + 1);
}

}  // namespace

int winding_number(const ComplexFn& curve, cplx point, int base_samples) {
  double total = 0.0;
  cplx prev = curve(0.0);
  const cplx first = prev;
  for (int i = 1; i <= base_samples; ++i) {
    const double t0 = 2.0 * kPi * (i - 1) / base_samples, t1 = 2.0 * kPi * i / base_samples;
    const cplx cur = i == base_samples ? first : curve(t1);
    total += refine_arg(curve, point, t0, t1, prev, cur, 0);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace scherk::oracles
