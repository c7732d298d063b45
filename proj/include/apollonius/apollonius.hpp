// Generalized Apollonius curves: the locus of points P with a fixed ratio
// S(d(A,P)) / S(d(B,P)) = k of circle circumferences around P through two
// foci A and B. In canonical position (foci on the x-axis, locus through
// the origin) the locus is the quadratic x^2 + y^2 - 2cx = 0 with
// c = k S(d) / (1 - k^2); for k = 1 it degenerates to the axis x = 0.

#pragma once

#include <vector>

#include "apollonius/geometry.hpp"

namespace apo {

// Ratios closer to 1 than this are treated as the k = 1 line case; nearer
// the pole the conic coefficient exceeds ~1e9 and stops being meaningful.
inline constexpr double kLineRatioThreshold = 1e-9;

struct ApolloniusSpec {
  double d = 0.0;  // geodesic distance between the foci
  double k = 0.0;  // circumference ratio
  CurvatureSign sign = CurvatureSign::hyperbolic;
};

/// Throws unless d > 0, k > 0 and (elliptic) d <= pi/2. The elliptic
/// boundary is closed: the formulas stay regular at d = pi/2.
void validate(const ApolloniusSpec& spec);

struct CanonicalFoci {
  double a = 0.0;  // abscissa of A, positive
  double b = 0.0;  // abscissa of B, negative
};

enum class CurveKind { conic, line };

/// Symmetric coefficient matrix of a conic in model coordinates; a chart
/// point (x, y) lies on the curve iff (x, y, 1) q (x, y, 1)^T = 0.
struct QuadraticCurve {
  Mat3 q;
  CurvatureSign sign = CurvatureSign::hyperbolic;
  CurveKind kind = CurveKind::conic;
};

enum class ConicTag { ellipse, paracycle, semi_hyperbola, line };

const char* to_string(ConicTag tag);

struct ConicClass {
  ConicTag tag = ConicTag::ellipse;
  int absolute_intersections = 0;
};

/// Focal abscissas of the canonical placement (Eq-4 of the construction):
/// a = k S(d)/(1 + k C(d)), b = -S(d)/(C(d) + k).
CanonicalFoci canonical_foci(const ApolloniusSpec& spec);

/// The x-coefficient c = k S(d) / (1 - k^2) of the canonical curve.
double curve_center_coeff(const ApolloniusSpec& spec);

/// Canonical curve matrix. The coefficient is computed both through the
/// focal abscissas and through the d-form and the two routes must agree to
/// 1e-12; k within kLineRatioThreshold of 1 yields the line x = 0.
QuadraticCurve apollonius_curve(const ApolloniusSpec& spec);

/// Checks a^2/(1+eps a^2) = k^2 b^2/(1+eps b^2) and
/// 1/(1+eps a^2) - k^2/(1+eps b^2) = 1 - k^2, both to 1e-12.
bool coefficient_identity_check(double a, double b, double k,
                                CurvatureSign sign);

/// S(d(A,P)) / S(d(B,P)). Throws if P = B.
double sine_ratio(const HomogeneousPoint& p, const HomogeneousPoint& a,
                  const HomogeneousPoint& b, CurvatureSign sign);

/// Chart evaluation (x, y, 1) q (x, y, 1)^T.
double evaluate(const QuadraticCurve& curve, Vec2 p);

/// Chart gradient of the quadratic form at p.
Vec2 gradient(const QuadraticCurve& curve, Vec2 p);

/// n samples of the canonical curve, improper points removed. The conic
/// branch walks theta = pi + 2*pi*i/n over (c(1+cos t), c sin t), so the
/// origin is always on the grid; the line branch walks the axis x = 0 in
/// arc length.
std::vector<Vec2> sample_curve(const QuadraticCurve& curve, int n);

/// Real intersections of a canonical curve with the absolute (hyperbolic)
/// or the ideal line (elliptic), solved directly from the two equations.
int count_absolute_intersections(const QuadraticCurve& curve);

/// Hyperbolic curves split by the number of absolute points: ellipse (0),
/// paracycle (1), semi-hyperbola (2), decided by |c| against 1/2 and
/// cross-checked against count_absolute_intersections. Elliptic conics are
/// always ellipses.
ConicClass classify(const QuadraticCurve& curve);

/// Expresses a canonical-frame curve in original coordinates for a frame
/// mapping original -> canonical: q_orig = frame^T q frame.
QuadraticCurve pull_back(const QuadraticCurve& canonical,
                         const Isometry& frame);

}  // namespace apo
