// Projective-model primitives for the constant-curvature planes.
//
// Points and lines are homogeneous coordinate triples; the geometry is
// selected by the sign of the curvature, which fixes the bilinear form
//   <x,y> = x1*y1 + x2*y2 + eps*x3*y3
// and the trig family (circular for elliptic, hyperbolic for hyperbolic).
// The affine chart x3 = 1 is the Beltrami-Klein disk (eps = -1) or the
// gnomonic chart (eps = +1).

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace apo {

inline constexpr double kPi = std::numbers::pi;

// Points whose normalized form sits closer than this to the absolute are
// treated as improper.
inline constexpr double kProperMargin = 1e-12;

// Inverse-trig arguments may exceed their domain by at most this much
// before we refuse to clamp.
inline constexpr double kClampSlack = 1e-9;

// Tolerance for projective equality tests.
inline constexpr double kProjectiveTol = 1e-9;

/// Curvature sign: +1 selects the elliptic plane, -1 the hyperbolic plane.
/// The Euclidean case eps = 0 is degenerate for these formulas and is not
/// representable here.
enum class CurvatureSign : int {
  hyperbolic = -1,
  elliptic = +1,
};

constexpr double eps_of(CurvatureSign s) {
  return static_cast<double>(static_cast<int>(s));
}

/// Affine chart point (x3 normalized to 1).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double chart_dist(Vec2 p, Vec2 q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

/// Raw coordinate triple.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double max_abs(const Vec3& v) {
  return std::max({std::fabs(v.x), std::fabs(v.y), std::fabs(v.z)});
}

/// Projective point (x1 : x2 : x3). Scalar multiples denote the same point.
struct HomogeneousPoint {
  Vec3 v;

  static HomogeneousPoint chart(double x, double y) { return {{x, y, 1.0}}; }
  static HomogeneousPoint origin() { return {{0.0, 0.0, 1.0}}; }
};

/// Projective line (u1 : u2 : u3); a point x is incident iff x.u = 0.
struct HomogeneousLine {
  Vec3 v;

  /// Line through two distinct points.
  static HomogeneousLine through(const HomogeneousPoint& p,
                                 const HomogeneousPoint& q) {
    Vec3 u = cross(p.v, q.v);
    if (max_abs(u) == 0.0)
      throw std::invalid_argument("line through coincident points");
    return {u};
  }
};

/// Projective equality: the cross product of the triples vanishes.
inline bool same_projective(const Vec3& a, const Vec3& b,
                            double tol = kProjectiveTol) {
  const double scale = max_abs(a) * max_abs(b);
  if (scale == 0.0) return false;
  return max_abs(cross(a, b)) <= tol * scale;
}

struct Mat3 {
  // Row-major.
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    return r;
  }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) s += a.m[i][l] * b.m[l][j];
        r.m[i][j] = s;
      }
    return r;
  }

  friend Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
  }
};

/// Projective map preserving the bilinear form up to scale, stored together
/// with its inverse so pullbacks never require a numerical inversion.
struct Isometry {
  Mat3 matrix = Mat3::identity();
  Mat3 inverse_matrix = Mat3::identity();

  static Isometry identity() { return {}; }

  Isometry inverse() const { return {inverse_matrix, matrix}; }

  HomogeneousPoint apply(const HomogeneousPoint& p) const {
    return {matrix * p.v};
  }

  /// Lines transform contravariantly: u -> u . M^{-1}.
  HomogeneousLine apply(const HomogeneousLine& u) const {
    return {inverse_matrix.transpose() * u.v};
  }

  friend Isometry operator*(const Isometry& a, const Isometry& b) {
    return {a.matrix * b.matrix, b.inverse_matrix * a.inverse_matrix};
  }
};

// --- bilinear form and generalized trig -------------------------------

double bilinear_form(const HomogeneousPoint& x, const HomogeneousPoint& y,
                     CurvatureSign sign);
double bilinear_form(const HomogeneousLine& u, const HomogeneousLine& v,
                     CurvatureSign sign);

/// C(t): cos for elliptic, cosh for hyperbolic.
double c_fn(double t, CurvatureSign sign);
/// S(t): sin for elliptic, sinh for hyperbolic.
double s_fn(double t, CurvatureSign sign);
/// T(t): tan for elliptic (throws near poles), tanh for hyperbolic.
double t_fn(double t, CurvatureSign sign);

/// Inverse of C, with clamping of arguments that miss the domain by no more
/// than kClampSlack.
double c_inv(double v, CurvatureSign sign);
/// Inverse of T (atan / atanh).
double t_inv(double v, CurvatureSign sign);

// --- properness and charts --------------------------------------------

/// A point is proper iff it normalizes to the chart and eps*<x,x> stays
/// above kProperMargin there. Hyperbolic: strictly inside the absolute;
/// elliptic: off the ideal line x3 = 0.
bool is_proper(const HomogeneousPoint& p, CurvatureSign sign);

/// A line is proper iff <u,u> > 0 after normalization (dual of the point
/// test; every elliptic line qualifies, a hyperbolic line must meet the
/// disk).
bool is_proper(const HomogeneousLine& u, CurvatureSign sign);

/// Chart coordinates of a point with x3 != 0.
Vec2 chart_coords(const HomogeneousPoint& p);

// --- metric -------------------------------------------------------------

/// Geodesic distance of two proper points: C(d) = eps<x,y>/sqrt(<x,x><y,y>)
/// evaluated on chart-normalized representatives. Elliptic distances are
/// folded into [0, pi/2].
double distance(const HomogeneousPoint& x, const HomogeneousPoint& y,
                CurvatureSign sign);

/// Unsigned angle of two proper intersecting lines, in [0, pi/2]:
/// cos a = |<u,v>| / sqrt(<u,u><v,v>).
double line_angle(const HomogeneousLine& u, const HomogeneousLine& v,
                  CurvatureSign sign);

/// Circumference of a metric circle of radius r: 2*pi*S(r).
double circumference(double r, CurvatureSign sign);

// --- isometries ---------------------------------------------------------

/// Translation along the x-axis carrying the origin to (T(t) : 0 : 1).
Isometry translation_along_x(double t, CurvatureSign sign);

/// Rotation of the chart about the origin (preserves the form for both
/// signs).
Isometry rotation_about_origin(double theta);

/// Isometry carrying a proper point to the origin.
Isometry move_to_origin(const HomogeneousPoint& p, CurvatureSign sign);

/// Focal abscissas a = k S(d)/(1 + k C(d)), b = -S(d)/(C(d) + k).
std::pair<double, double> canonical_abscissas(double d, double k,
                                              CurvatureSign sign);

struct CanonicalPlacement {
  Isometry frame;  // original -> canonical coordinates
  double a = 0.0;
  double b = 0.0;
};

/// Builds the isometry taking C1 to (a : 0 : 1) and C2 to (b : 0 : 1) with
/// a > 0 > b chosen so the ratio-k locus of the pair passes through the
/// origin.
CanonicalPlacement move_pair_to_canonical(const HomogeneousPoint& c1,
                                          const HomogeneousPoint& c2,
                                          double k, CurvatureSign sign);

}  // namespace apo
