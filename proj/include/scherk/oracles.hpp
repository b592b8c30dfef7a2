#pragma once

#include <functional>
#include <span>
#include <utility>

#include "scherk/common.hpp"
#include "scherk/harmonic.hpp"

// Brute-force numerical oracles. Nothing here may call a closed form from the
// params / weierstrass / analysis modules.
namespace scherk::oracles {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  int max_depth = 48;
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;
using Kernel = std::function<cplx(cplx)>;

struct PanelEstimate {
  double value;
  double error;  // |Kronrod - Gauss|
};

/// One 7/15-point Gauss-Kronrod panel.
PanelEstimate gauss_kronrod_panel(const RealFn& f, double a, double b);

/// Adaptive 7/15-point Gauss-Kronrod quadrature on [a, b].
double integrate(const RealFn& f, double a, double b, const QuadratureConfig& cfg = {});
cplx integrate(const ComplexFn& f, double a, double b, const QuadratureConfig& cfg = {});

/// Poisson integral of a step function, one panel per arc.
cplx poisson_extension(cplx z, const StepBoundary& boundary, const QuadratureConfig& cfg = {});

/// int kernel along the polyline through `path`.
cplx contour_integral(std::span<const cplx> path, const Kernel& kernel, const QuadratureConfig& cfg = {});

/// 2 Im int_0^z kernel, straight segment.
double contour_height(cplx z, const Kernel& kernel, const QuadratureConfig& cfg = {});

/// Circle-average residue, Richardson-combined over two radii.
cplx numeric_residue(const Kernel& kernel, cplx pole, int n_angles = 64, double eps_coarse = 1e-4, double eps_fine = 1e-5);

/// 5-point Laplacian; the stencil must stay inside |z| < domain_radius.
double fd_laplacian(const std::function<double(cplx)>& field, cplx z, double h, double domain_radius = 1.0);

/// (F(u+h,v+h) - F(u+h,v-h) - F(u-h,v+h) + F(u-h,v-h)) / (4 h^2)
double fd_mixed(const std::function<double(double, double)>& fn, double u, double v, double h);

struct GraphDerivatives {
  double fu, fv, fuu, fvv, fuv;

  double curvature() const;
  Vec3 upward_normal() const;
};

/// Centered first and second differences of a graph height function.
GraphDerivatives fd_graph_derivatives(const std::function<double(double, double)>& fn, double u, double v, double h);
/// Richardson combination (4 D(h/2) - D(h)) / 3 of the above.
GraphDerivatives fd_graph_derivatives_extrapolated(const std::function<double(double, double)>& fn, double u, double v,
                                                   double h);

/// Solve map(z) = target for a sense-preserving harmonic map with derivatives (h', g').
cplx newton_invert(const std::function<cplx(cplx)>& map, const std::function<std::pair<cplx, cplx>(cplx)>& derivs,
                   cplx target, cplx seed = 0.0, double tol = 1e-12, int max_iter = 50);

/// Winding number of the closed curve theta -> curve(theta), theta in [0, 2 pi], about `point`.
int winding_number(const ComplexFn& curve, cplx point, int base_samples = 4096);

}  // namespace scherk::oracles
