#include "apollonius/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace apo {

namespace {

double raw_form(const Vec3& a, const Vec3& b, CurvatureSign sign) {
  return a.x * b.x + a.y * b.y + eps_of(sign) * a.z * b.z;
}

void require_nonzero(const Vec3& v, const char* what) {
  if (max_abs(v) == 0.0) throw std::invalid_argument(std::string(what) + ": zero triple");
}

// Chart-normalized triple (x3 = 1). Fixing the representative makes every
// metric quantity projectively scale-invariant, including under negative
// rescaling.
Vec3 chart_triple(const HomogeneousPoint& p) {
  if (p.v.z == 0.0) throw std::domain_error("point on the ideal line x3 = 0 is improper");
  return {p.v.x / p.v.z, p.v.y / p.v.z, 1.0};
}

}  // namespace

double bilinear_form(const HomogeneousPoint& x, const HomogeneousPoint& y,
                     CurvatureSign sign) {
  require_nonzero(x.v, "bilinear_form");
  require_nonzero(y.v, "bilinear_form");
  return raw_form(x.v, y.v, sign);
}

double bilinear_form(const HomogeneousLine& u, const HomogeneousLine& v,
                     CurvatureSign sign) {
  require_nonzero(u.v, "bilinear_form");
  require_nonzero(v.v, "bilinear_form");
  return raw_form(u.v, v.v, sign);
}

double c_fn(double t, CurvatureSign sign) {
  return sign == CurvatureSign::elliptic ? std::cos(t) : std::cosh(t);
}

double s_fn(double t, CurvatureSign sign) {
  return sign == CurvatureSign::elliptic ? std::sin(t) : std::sinh(t);
}

double t_fn(double t, CurvatureSign sign) {
  if (sign == CurvatureSign::hyperbolic) return std::tanh(t);
  if (std::fabs(std::cos(t)) <= 1e-12)
    throw std::domain_error("t_fn: elliptic tangent pole at t = pi/2 (mod pi)");
  return std::tan(t);
}

double c_inv(double v, CurvatureSign sign) {
  if (sign == CurvatureSign::elliptic) {
    if (std::fabs(v) > 1.0 + kClampSlack)
      throw std::domain_error("c_inv: argument outside [-1, 1]");
    return std::acos(std::clamp(v, -1.0, 1.0));
  }
  if (v < 1.0 - kClampSlack)
    throw std::domain_error("c_inv: argument below 1 for acosh");
  return std::acosh(std::max(v, 1.0));
}

double t_inv(double v, CurvatureSign sign) {
  if (sign == CurvatureSign::elliptic) return std::atan(v);
  if (std::fabs(v) >= 1.0)
    throw std::domain_error("t_inv: |argument| >= 1 for atanh");
  return std::atanh(v);
}

bool is_proper(const HomogeneousPoint& p, CurvatureSign sign) {
  require_nonzero(p.v, "is_proper");
  if (p.v.z == 0.0) return false;
  const Vec3 c = {p.v.x / p.v.z, p.v.y / p.v.z, 1.0};
  return eps_of(sign) * raw_form(c, c, sign) > kProperMargin;
}

bool is_proper(const HomogeneousLine& u, CurvatureSign sign) {
  require_nonzero(u.v, "is_proper");
  const double s = max_abs(u.v);
  const Vec3 n = {u.v.x / s, u.v.y / s, u.v.z / s};
  return raw_form(n, n, sign) > kProperMargin;
}

Vec2 chart_coords(const HomogeneousPoint& p) {
  const Vec3 c = chart_triple(p);
  return {c.x, c.y};
}

double distance(const HomogeneousPoint& x, const HomogeneousPoint& y,
                CurvatureSign sign) {
  if (!is_proper(x, sign) || !is_proper(y, sign))
    throw std::domain_error("distance: improper point");
  const Vec3 a = chart_triple(x);
  const Vec3 b = chart_triple(y);
  const double qa = raw_form(a, a, sign);
  const double qb = raw_form(b, b, sign);
  double arg = eps_of(sign) * raw_form(a, b, sign) / std::sqrt(qa * qb);
  if (sign == CurvatureSign::elliptic) {
    // Representative signs cancel in |arg|; the projective plane has
    // diameter pi/2, so the elliptic distance is the folded branch.
    arg = std::fabs(arg);
  }
  return c_inv(arg, sign);
}

double line_angle(const HomogeneousLine& u, const HomogeneousLine& v,
                  CurvatureSign sign) {
  if (!is_proper(u, sign) || !is_proper(v, sign))
    throw std::domain_error("line_angle: improper line");
  const double qu = raw_form(u.v, u.v, sign);
  const double qv = raw_form(v.v, v.v, sign);
  const double arg = std::fabs(raw_form(u.v, v.v, sign)) / std::sqrt(qu * qv);
  if (arg > 1.0 + kClampSlack)
    throw std::domain_error("line_angle: lines have no common proper point");
  return std::acos(std::min(arg, 1.0));
}

double circumference(double r, CurvatureSign sign) {
  if (r <= 0.0) throw std::domain_error("circumference: radius must be positive");
  if (sign == CurvatureSign::elliptic && r >= kPi / 2.0)
    throw std::domain_error("circumference: elliptic radius must be below pi/2");
  return 2.0 * kPi * s_fn(r, sign);
}

Isometry translation_along_x(double t, CurvatureSign sign) {
  auto block = [sign](double s) {
    const double C = c_fn(s, sign);
    const double S = s_fn(s, sign);
    Mat3 m = Mat3::identity();
    m.m[0][0] = C;
    m.m[0][2] = S;
    m.m[2][0] = -eps_of(sign) * S;
    m.m[2][2] = C;
    return m;
  };
  return {block(t), block(-t)};
}

Isometry rotation_about_origin(double theta) {
  auto block = [](double a) {
    const double c = std::cos(a);
    const double s = std::sin(a);
    Mat3 m = Mat3::identity();
    m.m[0][0] = c;
    m.m[0][1] = -s;
    m.m[1][0] = s;
    m.m[1][1] = c;
    return m;
  };
  return {block(theta), block(-theta)};
}

Isometry move_to_origin(const HomogeneousPoint& p, CurvatureSign sign) {
  if (!is_proper(p, sign)) throw std::domain_error("move_to_origin: improper point");
  const Vec2 c = chart_coords(p);
  const double phi = std::atan2(c.y, c.x);
  const double t = distance(HomogeneousPoint::origin(), p, sign);
  return translation_along_x(-t, sign) * rotation_about_origin(-phi);
}

std::pair<double, double> canonical_abscissas(double d, double k,
                                              CurvatureSign sign) {
  const double S = s_fn(d, sign);
  const double C = c_fn(d, sign);
  return {k * S / (1.0 + k * C), -S / (C + k)};
}

CanonicalPlacement move_pair_to_canonical(const HomogeneousPoint& c1,
                                          const HomogeneousPoint& c2,
                                          double k, CurvatureSign sign) {
  if (k <= 0.0) throw std::invalid_argument("move_pair_to_canonical: k must be positive");
  if (!is_proper(c1, sign) || !is_proper(c2, sign))
    throw std::domain_error("move_pair_to_canonical: improper center");
  if (same_projective(c1.v, c2.v, 1e-12))
    throw std::invalid_argument("move_pair_to_canonical: coincident centers");

  const double d = distance(c1, c2, sign);
  if (sign == CurvatureSign::elliptic && d > kPi / 2.0 + kProperMargin)
    throw std::domain_error("move_pair_to_canonical: elliptic distance above pi/2");

  const auto [a, b] = canonical_abscissas(d, k, sign);

  // C1 to the origin, then rotate the image of C2 onto the negative x-axis,
  // then slide the origin out to (a : 0 : 1). The image of C2 lands on the
  // arc coordinate t_inv(a) - d, which equals t_inv(b) by the focal
  // identities.
  const Isometry to_origin = move_to_origin(c1, sign);
  Vec3 q = to_origin.apply(c2).v;
  // Direction of q from the origin. The representative sign matters only
  // through z; at z = 0 (elliptic pair at distance exactly pi/2) either
  // choice lands on the same projective image.
  const double flip = (q.z < 0.0) ? -1.0 : 1.0;
  const double phi = std::atan2(flip * q.y, flip * q.x);
  const Isometry align = rotation_about_origin(kPi - phi);
  const Isometry out = translation_along_x(t_inv(a, sign), sign);
  Isometry frame = out * align * to_origin;

  const Vec3 ia = frame.apply(c1).v;
  const Vec3 ib = frame.apply(c2).v;
  if (!same_projective(ia, {a, 0.0, 1.0}, 1e-9) ||
      !same_projective(ib, {b, 0.0, 1.0}, 1e-9))
    throw std::logic_error("move_pair_to_canonical: canonical placement failed");
  return {frame, a, b};
}

}  // namespace apo
