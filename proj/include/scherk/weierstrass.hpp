#pragma once

#include <array>

#include "scherk/common.hpp"
#include "scherk/geometry.hpp"
#include "scherk/params.hpp"

namespace scherk {

/// K(z) = C (z - z0)(1 - z conj z0) / ((1 - z^2)(e^{2ip} - z^2)) and its partial fractions.
struct HeightKernel {
  cplx C;
  cplx z0;
  cplx e_2ip;
  std::array<cplx, 4> poles{};     // 1, e^{ip}, -1, -e^{ip}
  std::array<cplx, 4> residues{};  // partial-fraction coefficients of K
  double lambda = 0.0;
  std::array<double, 4> log_constants{};  // C_1..C_4
};

/// Moebius Gauss map q = sqrtX (z - z0) / (1 - z conj z0).
cplx gauss_map_q(cplx z, const ScherkData& d);
cplx gauss_map_q_prime(cplx z, const ScherkData& d);

cplx kernel_K(cplx z, const ScherkData& d);
cplx kernel_K(cplx z, const HeightKernel& kernel);

HeightKernel height_kernel(const ScherkData& d);

/// Residue at poles[index] in the signed-modulus form +-i Lambda |1 -+ z0 e^{-i arg pole}|^2.
cplx residue_closed_form(const HeightKernel& kernel, int index);

/// T(z) = 2 Im int_0^z K.
double height_T(cplx z, const HeightKernel& kernel);

struct AsymptoticConstants {
  double lambda;
  std::array<double, 4> c;  // C_1..C_4 at 1, e^{ip}, -1, -e^{ip}
};

/// Lambda = cosh j (cos m + cosh k) / (4 pi); C_k = Lambda |1 -+ z0 e^{-i theta_k}|^2.
AsymptoticConstants asymptotic_constants(const ScherkData& d);

/// Sign of the logarithmic blow-up coefficient at each pole: T ~ sign * 2 C_k log|z - pole|.
inline constexpr std::array<int, 4> kLogLawSigns{+1, -1, +1, -1};

/// (x, y, height) of the surface in original coordinates. The height is the
/// normalized height scaled by |b3 - b1| / 2.
Vec3 surface_point(cplx z, const ScherkData& d, const HeightKernel& kernel, const NormalizedFrame& frame);

/// Upward unit normal of (Re f, Im f, T) at z, normalized frame:
/// (-2 Im q, -2 Re q, 1 - |q|^2) / (1 + |q|^2).
Vec3 surface_normal(cplx z, const ScherkData& d);
/// Rotate the horizontal part of a normalized-frame normal into original coordinates.
Vec3 denormalize_normal(const Vec3& n, const NormalizedFrame& frame);

/// (2 Re q, 2 Im q, 1 - |q|^2) / (1 + |q|^2)
Vec3 stereographic_lift(cplx q);

}  // namespace scherk
