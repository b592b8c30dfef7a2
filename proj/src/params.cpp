#include "scherk/params.hpp"

#include <cmath>

namespace scherk {

double rapidity_cosine(double s_minus_t) { return 1.0 - 4.0 / (1.0 + std::cosh(s_minus_t)); }

AngleParameter angle_parameter(const HyperbolicCoords& c) {
  const double d = c.s - c.t;
  if (std::abs(d) < 1e-9) throw Error(ErrorCode::EqualRapidities, "p degenerates to a multiple of 2 pi");
  const double E = rapidity_cosine(d);
  // 1 - E and 1 + E separately to keep sin p accurate when p is near 0 or pi.
  const double one_minus = 4.0 / (1.0 + std::cosh(d));
  const double one_plus = 2.0 - one_minus;
  const double sin_p = std::sqrt(one_minus * one_plus);
  return {std::atan2(sin_p, E), cplx(E, sin_p)};
}

cplx exp_ip_from_half_gap(double j) {
  const double ej = std::exp(j);
  const cplx r = (kI + ej) / (kI - ej);
  return r * r;
}

double vertex_form_E(cplx z, cplx w) {
  const double x = z.real(), y = z.imag(), u = w.real(), v = w.imag();
  const double den = (u + x) * (v + y);
  if (std::abs(den) < 1e-12) throw Error(ErrorCode::DivisionDegenerate, "(u + x)(v + y) vanishes");
  return (u * v - 3.0 * v * x - 3.0 * u * y + x * y) / den;
}

cplx moebius_center(const HyperbolicCoords& c) {
  // (e^{s/2} + i e^{t/2}) / (e^{s/2} - i e^{t/2}) * (e^{k+im} - 1) / (e^{k+im} + 1)
  const double ej = std::exp(-c.j);
  return (1.0 + kI * ej) / (1.0 - kI * ej) * std::tanh(0.5 * cplx(c.k, c.m));
}

cplx moebius_center_from_vertices(cplx z, cplx w, cplx e_ip) {
  const double x = z.real(), y = z.imag(), u = w.real(), v = w.imag();
  const double sin_p = e_ip.imag();
  const cplx num = kI * e_ip * sin_p * cplx(-(x + u), y + v);
  const cplx den = cplx(u - x - 2.0, y - v) + e_ip * cplx(x - u - 2.0, v - y);
  return num / den;
}

double moebius_center_modulus(const HyperbolicCoords& c) {
  const double ck = std::cosh(c.k), cm = std::cos(c.m);
  return std::sqrt((ck - cm) / (ck + cm));
}

UnimodularFactor unimodular_factor(const HyperbolicCoords& c) {
  const double ej = std::exp(-c.j);
  const cplx f1 = (kI + ej) / (1.0 + kI * ej);
  const cplx eim = std::polar(1.0, c.m);
  const double ek = std::exp(c.k);
  const cplx f2 = (1.0 + ek * eim) / (eim + ek);
  const cplx X = f1 * f1 * f2 * f2;
  return {X, f1 * f2};
}

cplx unimodular_factor_from_vertices(cplx z, cplx w, double p) {
  const double x = z.real(), y = z.imag(), u = w.real(), v = w.imag();
  const double c2 = 2.0 * std::cos(0.5 * p), s2 = std::sin(0.5 * p), sp = std::sin(p);
  const cplx a = c2 + cplx(v - y, u - x) * s2;
  const cplx b = c2 + cplx(y - v, x - u) * s2;
  const cplx d = c2 + cplx(v - y, x - u) * s2;
  const cplx e = u - kI * (v + kI * x + y);
  return -4.0 * std::polar(1.0, -p) / (sp * sp) * a * a * b / (e * e * d);
}

cplx h_prime_at_zero_closed(const HyperbolicCoords& c) {
  const cplx num = -2.0 - std::sin(cplx(c.m, c.s)) + std::sin(cplx(c.m, c.t));
  return (-2.0 * kI + num / (kI + std::sinh(c.j))) / kPi;
}

cplx key_identity_rhs(const HyperbolicCoords& c) {
  return -kI * std::cosh(c.j) * (std::cos(c.m) + std::cosh(c.k)) / (2.0 * kPi);
}

WeierstrassConstants weierstrass_constants(const HyperbolicCoords& c, const AngleParameter& ap, cplx z0) {
  const cplx e2ip = ap.e_ip * ap.e_ip;
  const auto uf = unimodular_factor(c);
  WeierstrassConstants wc;
  wc.B = e2ip * h_prime_at_zero_closed(c);
  wc.Z = uf.X;
  wc.A = wc.B * wc.Z;
  wc.sqrtX = uf.sqrtX;
  wc.C = wc.B * wc.sqrtX;
  // Residue of C (z - z0)(1 - z conj z0) / ((1 - z^2)(e^{2ip} - z^2)) at z = 1.
  const cplx res1 = -wc.C * std::norm(1.0 - z0) / (2.0 * (e2ip - 1.0));
  if (res1.imag() < 0.0) {
    wc.sqrtX = -wc.sqrtX;
    wc.C = -wc.C;
  }
  return wc;
}

ScherkData make_scherk_data(const HyperbolicCoords& c) {
  const AngleParameter ap = angle_parameter(c);
  ScherkData d;
  d.coords = c;
  d.p = ap.p;
  d.e_ip = ap.e_ip;
  d.z0 = moebius_center(c);
  const auto wc = weierstrass_constants(c, ap, d.z0);
  d.X = wc.Z;
  d.sqrtX = wc.sqrtX;
  d.B = wc.B;
  d.Z = wc.Z;
  d.A = wc.A;
  d.C = wc.C;
  d.vertices = {cplx(-1.0, 0.0), hyperbola_point(c.m, c.t), cplx(1.0, 0.0), hyperbola_point(c.m, c.s)};
  return d;
}

}  // namespace scherk
