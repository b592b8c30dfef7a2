#include "scherk/weierstrass.hpp"

#include <cmath>

#include "scherk/harmonic.hpp"

namespace scherk {

cplx gauss_map_q(cplx z, const ScherkData& d) { return d.sqrtX * moebius_phi(z, d.z0); }

cplx gauss_map_q_prime(cplx z, const ScherkData& d) {
  const cplx den = 1.0 - z * std::conj(d.z0);
  return d.sqrtX * (1.0 - std::norm(d.z0)) / (den * den);
}

cplx kernel_K(cplx z, const HeightKernel& kernel) {
  for (const cplx& pole : kernel.poles)
    if (std::abs(z - pole) < kTolPole) throw Error(ErrorCode::PoleProximity, "evaluation point too close to a pole of K");
  const cplx z2 = z * z;
  return kernel.C * (z - kernel.z0) * (1.0 - z * std::conj(kernel.z0)) / ((1.0 - z2) * (kernel.e_2ip - z2));
}

cplx kernel_K(cplx z, const ScherkData& d) { return kernel_K(z, height_kernel(d)); }

HeightKernel height_kernel(const ScherkData& d) {
  HeightKernel k;
  k.C = d.C;
  k.z0 = d.z0;
  k.e_2ip = d.e_ip * d.e_ip;
  k.poles = {cplx(1.0, 0.0), d.e_ip, cplx(-1.0, 0.0), -d.e_ip};
  for (int i = 0; i < 4; ++i) {
    const cplx zeta = k.poles[i];
    const cplx num = (zeta - d.z0) * (1.0 - zeta * std::conj(d.z0));
    const cplx dden = -2.0 * zeta * (k.e_2ip + 1.0 - 2.0 * zeta * zeta);
    k.residues[i] = k.C * num / dden;
  }
  const auto ac = asymptotic_constants(d);
  k.lambda = ac.lambda;
  k.log_constants = ac.c;
  return k;
}

cplx residue_closed_form(const HeightKernel& kernel, int index) {
  return kI * static_cast<double>(kLogLawSigns.at(index)) * kernel.log_constants.at(index);
}

double height_T(cplx z, const HeightKernel& kernel) {
  cplx acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += kernel.residues[i] * std::log(1.0 - z / kernel.poles[i]);
  return 2.0 * acc.imag();
}

AsymptoticConstants asymptotic_constants(const ScherkData& d) {
  const auto& c = d.coords;
  AsymptoticConstants ac;
  ac.lambda = std::cosh(c.j) * (std::cos(c.m) + std::cosh(c.k)) / (4.0 * kPi);
  const cplx rot = d.z0 * std::conj(d.e_ip);
  ac.c = {ac.lambda * std::norm(1.0 - d.z0), ac.lambda * std::norm(1.0 - rot), ac.lambda * std::norm(1.0 + d.z0),
          ac.lambda * std::norm(1.0 + rot)};
  return ac;
}

Vec3 surface_point(cplx z, const ScherkData& d, const HeightKernel& kernel, const NormalizedFrame& frame) {
  const cplx xy = harmonic_map(z, d, frame);
  const double height = height_T(z, kernel) * std::abs(frame.from_normalized.scale);
  return {xy.real(), xy.imag(), height};
}

Vec3 surface_normal(cplx z, const ScherkData& d) {
  const cplx q = gauss_map_q(z, d);
  const double a = std::norm(q);
  return {-2.0 * q.imag() / (1.0 + a), -2.0 * q.real() / (1.0 + a), (1.0 - a) / (1.0 + a)};
}

Vec3 denormalize_normal(const Vec3& n, const NormalizedFrame& frame) {
  const cplx rot = frame.from_normalized.scale / std::abs(frame.from_normalized.scale);
  const cplx h = rot * cplx(n[0], n[1]);
  return {h.real(), h.imag(), n[2]};
}

Vec3 stereographic_lift(cplx q) {
  const double a = std::norm(q);
  return {2.0 * q.real() / (1.0 + a), 2.0 * q.imag() / (1.0 + a), (1.0 - a) / (1.0 + a)};
}

}  // namespace scherk
