// Viewing angles of circles and equioptic curves of circle pairs. The
// spherical sine rule gives sin(alpha/2) = S(r)/S(d) for the half angle
// subtended by a circle of radius r at distance d, so the points seeing two
// circles under equal angles form the generalized Apollonius curve of the
// centers with ratio k = S(r1)/S(r2).

#pragma once

#include <vector>

#include "apollonius/apollonius.hpp"
#include "apollonius/geometry.hpp"

namespace apo {

struct Circle {
  HomogeneousPoint center;
  double radius = 0.0;
};

/// Throws unless the center is proper, r > 0 and (elliptic) r < pi/2.
void validate(const Circle& circle, CurvatureSign sign);

/// Chart point of the circle's model locus at parameter phi; the locus is
/// the chart circle of radius T(r) about the origin carried to the center
/// by an isometry.
HomogeneousPoint circle_point(const Circle& circle, double phi,
                              CurvatureSign sign);

/// Viewing angle of a circle from a proper point with d(P, center) >= r:
/// alpha = 2 asin(S(r)/S(d)), in (0, pi].
double viewing_angle(const HomogeneousPoint& p, const Circle& circle,
                     CurvatureSign sign);

/// Independent tangent-construction check of viewing_angle: moves P to the
/// origin, brackets the two support directions of the circle's model locus
/// by bisecting the sign of the point-line incidence along the locus, and
/// measures the enclosed angle through the line-angle formula. Requires
/// d > r, and for the elliptic plane d + r < pi/2 so the locus stays on one
/// side of the ideal line as seen from P.
double viewing_angle_oracle(const HomogeneousPoint& p, const Circle& circle,
                            CurvatureSign sign);

struct EquiopticResult {
  QuadraticCurve curve;  // in original coordinates
  Isometry frame;        // original -> canonical
  double k = 0.0;        // S(r1)/S(r2)
  double d = 0.0;        // distance of the centers
  CurvatureSign sign = CurvatureSign::hyperbolic;
};

/// Equioptic curve of two circles: the generalized Apollonius curve of the
/// centers with k = S(r1)/S(r2), synthesized in canonical position and
/// pulled back through the canonical frame. Equal sines give the
/// perpendicular-bisector axis. Throws for coincident centers, whose locus
/// is degenerate (empty or the whole plane).
EquiopticResult equioptic_curve(const Circle& c1, const Circle& c2,
                                CurvatureSign sign);

/// Samples of the equioptic locus in original coordinates.
std::vector<Vec2> sample_equioptic(const EquiopticResult& result, int n);

/// Keeps the points having tangents to both circles, i.e. d(P, Ci) >= ri.
std::vector<Vec2> filter_valid_equioptic_points(const std::vector<Vec2>& points,
                                                const Circle& c1,
                                                const Circle& c2,
                                                CurvatureSign sign);

}  // namespace apo
