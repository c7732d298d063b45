#include "apollonius/equioptic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apo {

namespace {

// Signed chart incidence of the locus point at parameter phi with the line
// through the origin in direction psi.
struct LocusProbe {
  Isometry to_center;  // origin -> circle center (in the P-at-origin frame)
  double model_radius = 0.0;

  Vec2 at(double phi) const {
    const HomogeneousPoint q = to_center.apply(HomogeneousPoint::chart(
        model_radius * std::cos(phi), model_radius * std::sin(phi)));
    return chart_coords(q);
  }

  double incidence(double phi, double psi) const {
    const Vec2 q = at(phi);
    return -std::sin(psi) * q.x + std::cos(psi) * q.y;
  }
};

// Minimum (or maximum) of the smooth incidence over the closed locus:
// coarse grid, then ternary refinement around the best cell.
double extreme_incidence(const LocusProbe& probe, double psi, bool want_max) {
  constexpr int grid = 512;
  int best = 0;
  double best_val = probe.incidence(0.0, psi) * (want_max ? 1.0 : -1.0);
  for (int i = 1; i < grid; ++i) {
    const double v =
        probe.incidence(2.0 * kPi * i / grid, psi) * (want_max ? 1.0 : -1.0);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = 2.0 * kPi * (best - 1) / grid;
  double hi = 2.0 * kPi * (best + 1) / grid;
  for (int it = 0; it < 90; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double f1 = probe.incidence(m1, psi) * (want_max ? 1.0 : -1.0);
    const double f2 = probe.incidence(m2, psi) * (want_max ? 1.0 : -1.0);
    if (f1 < f2)
      lo = m1;
    else
      hi = m2;
  }
  return probe.incidence(0.5 * (lo + hi), psi);
}

// True when the line through the origin with direction psi crosses the
// locus (incidence changes sign along it).
bool is_secant(const LocusProbe& probe, double psi) {
  const double lo = extreme_incidence(probe, psi, false);
  const double hi = extreme_incidence(probe, psi, true);
  return lo < 0.0 && hi > 0.0;
}

double bisect_tangent_direction(const LocusProbe& probe, double secant_psi,
                                double miss_psi) {
  for (int it = 0; it < 70; ++it) {
    const double mid = 0.5 * (secant_psi + miss_psi);
    if (is_secant(probe, mid))
      secant_psi = mid;
    else
      miss_psi = mid;
  }
  return 0.5 * (secant_psi + miss_psi);
}

}  // namespace

void validate(const Circle& circle, CurvatureSign sign) {
  if (!(circle.radius > 0.0))
    throw std::invalid_argument("circle: radius must be positive");
  if (sign == CurvatureSign::elliptic && circle.radius >= kPi / 2.0)
    throw std::invalid_argument("circle: elliptic radius must be below pi/2");
  if (!is_proper(circle.center, sign))
    throw std::domain_error("circle: improper center");
}

HomogeneousPoint circle_point(const Circle& circle, double phi,
                              CurvatureSign sign) {
  validate(circle, sign);
  const Isometry to_center = move_to_origin(circle.center, sign).inverse();
  const double model_r = t_fn(circle.radius, sign);
  return to_center.apply(
      HomogeneousPoint::chart(model_r * std::cos(phi), model_r * std::sin(phi)));
}

double viewing_angle(const HomogeneousPoint& p, const Circle& circle,
                     CurvatureSign sign) {
  validate(circle, sign);
  const double d = distance(p, circle.center, sign);
  if (d < circle.radius - kProperMargin)
    throw std::domain_error("viewing_angle: point inside the circle, no tangents");
  const double arg = s_fn(circle.radius, sign) / s_fn(std::max(d, circle.radius), sign);
  if (arg > 1.0 + kClampSlack)
    throw std::domain_error("viewing_angle: sine ratio above 1");
  // alpha/2 < pi/2, where the sine is unique.
  return 2.0 * std::asin(std::min(arg, 1.0));
}

double viewing_angle_oracle(const HomogeneousPoint& p, const Circle& circle,
                            CurvatureSign sign) {
  validate(circle, sign);
  const double d = distance(p, circle.center, sign);
  if (d <= circle.radius)
    throw std::domain_error("viewing_angle_oracle: need d > r strictly");
  if (sign == CurvatureSign::elliptic && d + circle.radius >= kPi / 2.0 - 1e-6)
    throw std::domain_error(
        "viewing_angle_oracle: elliptic locus reaches the ideal line as seen from P");

  // Work in the frame where P is the chart origin; there the chart is
  // conformal and support lines of the mapped locus are the tangents.
  const Isometry to_p = move_to_origin(p, sign);
  const HomogeneousPoint center = to_p.apply(circle.center);
  const Vec2 cc = chart_coords(center);

  LocusProbe probe;
  probe.to_center = move_to_origin(center, sign).inverse();
  probe.model_radius = t_fn(circle.radius, sign);

  const double psi_center = std::atan2(cc.y, cc.x);
  if (!is_secant(probe, psi_center))
    throw std::logic_error("viewing_angle_oracle: center direction misses the locus");
  // Half the viewing angle is below pi/2, so psi_center +- pi/2 both miss.
  const double upper =
      bisect_tangent_direction(probe, psi_center, psi_center + kPi / 2.0);
  const double lower =
      bisect_tangent_direction(probe, psi_center, psi_center - kPi / 2.0);

  const double spread = upper - lower;  // in (0, pi)
  const HomogeneousLine u{{-std::sin(upper), std::cos(upper), 0.0}};
  const HomogeneousLine v{{-std::sin(lower), std::cos(lower), 0.0}};
  const double folded = line_angle(u, v, sign);
  return spread > kPi / 2.0 ? kPi - folded : folded;
}

EquiopticResult equioptic_curve(const Circle& c1, const Circle& c2,
                                CurvatureSign sign) {
  validate(c1, sign);
  validate(c2, sign);
  if (same_projective(c1.center.v, c2.center.v, 1e-12))
    throw std::invalid_argument(
        "equioptic_curve: coincident centers give a degenerate locus "
        "(empty for distinct radii, the whole plane for equal radii)");

  EquiopticResult result;
  result.sign = sign;
  result.d = distance(c1.center, c2.center, sign);
  result.k = s_fn(c1.radius, sign) / s_fn(c2.radius, sign);

  const auto placement =
      move_pair_to_canonical(c1.center, c2.center, result.k, sign);
  result.frame = placement.frame;

  const QuadraticCurve canonical =
      apollonius_curve({result.d, result.k, sign});
  result.curve = pull_back(canonical, result.frame);
  return result;
}

std::vector<Vec2> sample_equioptic(const EquiopticResult& result, int n) {
  const QuadraticCurve canonical =
      apollonius_curve({result.d, result.k, result.sign});
  const Isometry back = result.frame.inverse();
  std::vector<Vec2> points;
  for (const Vec2& p : sample_curve(canonical, n)) {
    const HomogeneousPoint mapped = back.apply(HomogeneousPoint::chart(p.x, p.y));
    if (!is_proper(mapped, result.sign)) continue;
    points.push_back(chart_coords(mapped));
  }
  return points;
}

std::vector<Vec2> filter_valid_equioptic_points(const std::vector<Vec2>& points,
                                                const Circle& c1,
                                                const Circle& c2,
                                                CurvatureSign sign) {
  std::vector<Vec2> kept;
  for (const Vec2& p : points) {
    const HomogeneousPoint hp = HomogeneousPoint::chart(p.x, p.y);
    if (!is_proper(hp, sign)) continue;
    if (distance(hp, c1.center, sign) < c1.radius) continue;
    if (distance(hp, c2.center, sign) < c2.radius) continue;
    kept.push_back(p);
  }
  return kept;
}

}  // namespace apo
