#include "apollonius/apollonius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apo {

namespace {

constexpr double kCoeffTol = 1e-12;
constexpr double kBoundaryTol = 1e-12;  // |c| vs 1/2 paracycle band

// c extracted from a canonical matrix, tolerating projective rescaling.
double canonical_coeff(const QuadraticCurve& curve) {
  const auto& q = curve.q.m;
  const double s = q[0][0];
  if (s == 0.0) throw std::invalid_argument("curve is not in canonical form");
  if (std::fabs(q[1][1] / s - 1.0) > 1e-9 || std::fabs(q[0][1] / s) > 1e-9 ||
      std::fabs(q[1][2] / s) > 1e-9 || std::fabs(q[2][2] / s) > 1e-9)
    throw std::invalid_argument("curve is not in canonical form");
  return -q[0][2] / s;
}

}  // namespace

void validate(const ApolloniusSpec& spec) {
  if (!(spec.d > 0.0)) throw std::invalid_argument("spec: d must be positive");
  if (!(spec.k > 0.0)) throw std::invalid_argument("spec: k must be positive");
  if (spec.sign == CurvatureSign::elliptic && spec.d > kPi / 2.0 + 4e-16)
    throw std::invalid_argument("spec: elliptic d must not exceed pi/2");
}

const char* to_string(ConicTag tag) {
  switch (tag) {
    case ConicTag::ellipse: return "Ellipse";
    case ConicTag::paracycle: return "Paracycle";
    case ConicTag::semi_hyperbola: return "SemiHyperbola";
    case ConicTag::line: return "Line";
  }
  return "?";
}

CanonicalFoci canonical_foci(const ApolloniusSpec& spec) {
  validate(spec);
  const auto [a, b] = canonical_abscissas(spec.d, spec.k, spec.sign);
  return {a, b};
}

double curve_center_coeff(const ApolloniusSpec& spec) {
  validate(spec);
  if (spec.k == 1.0)
    throw std::domain_error("curve_center_coeff: pole at k = 1");
  return spec.k * s_fn(spec.d, spec.sign) / (1.0 - spec.k * spec.k);
}

QuadraticCurve apollonius_curve(const ApolloniusSpec& spec) {
  validate(spec);
  QuadraticCurve curve;
  curve.sign = spec.sign;

  if (std::fabs(spec.k - 1.0) < kLineRatioThreshold) {
    // k = 1: the locus is the axis x = 0, stored as the rank-one form x^2.
    curve.kind = CurveKind::line;
    curve.q = Mat3{};
    curve.q.m[0][0] = 1.0;
    return curve;
  }

  const double eps = eps_of(spec.sign);
  const auto [a, b] = canonical_abscissas(spec.d, spec.k, spec.sign);
  const double k2 = spec.k * spec.k;
  const double wa = 1.0 + eps * a * a;
  const double wb = 1.0 + eps * b * b;
  const double c_from_foci = (a * wb - k2 * b * wa) / ((1.0 - k2) * wa * wb);
  const double c = curve_center_coeff(spec);
  if (std::fabs(c_from_foci - c) > kCoeffTol * std::max(1.0, std::fabs(c)))
    throw std::logic_error("apollonius_curve: focal and d-form coefficients disagree");

  curve.kind = CurveKind::conic;
  curve.q = Mat3::identity();
  curve.q.m[2][2] = 0.0;
  curve.q.m[0][2] = -c;
  curve.q.m[2][0] = -c;
  return curve;
}

bool coefficient_identity_check(double a, double b, double k,
                                CurvatureSign sign) {
  const double eps = eps_of(sign);
  const double wa = 1.0 + eps * a * a;
  const double wb = 1.0 + eps * b * b;
  const double origin_on_curve = a * a / wa - k * k * b * b / wb;
  const double identity = 1.0 / wa - k * k / wb - (1.0 - k * k);
  return std::fabs(origin_on_curve) <= kCoeffTol &&
         std::fabs(identity) <= kCoeffTol;
}

double sine_ratio(const HomogeneousPoint& p, const HomogeneousPoint& a,
                  const HomogeneousPoint& b, CurvatureSign sign) {
  const double denom = s_fn(distance(b, p, sign), sign);
  if (denom == 0.0) throw std::domain_error("sine_ratio: P coincides with B");
  return s_fn(distance(a, p, sign), sign) / denom;
}

double evaluate(const QuadraticCurve& curve, Vec2 p) {
  const Vec3 v = curve.q * Vec3{p.x, p.y, 1.0};
  return p.x * v.x + p.y * v.y + v.z;
}

Vec2 gradient(const QuadraticCurve& curve, Vec2 p) {
  const Vec3 v = curve.q * Vec3{p.x, p.y, 1.0};
  return {2.0 * v.x, 2.0 * v.y};
}

std::vector<Vec2> sample_curve(const QuadraticCurve& curve, int n) {
  if (n < 3) throw std::invalid_argument("sample_curve: need n >= 3");
  std::vector<Vec2> points;
  points.reserve(static_cast<size_t>(n));

  if (curve.kind == CurveKind::line) {
    // Arc-length walk of the axis keeps the samples well inside the proper
    // region for both geometries.
    const double span = curve.sign == CurvatureSign::hyperbolic ? 2.0 : 1.2;
    for (int i = 0; i < n; ++i) {
      const double s = span * (2.0 * i - (n - 1)) / (n - 1);
      points.push_back({0.0, t_fn(s, curve.sign)});
    }
    return points;
  }

  const double c = canonical_coeff(curve);
  std::vector<Vec2> grid(static_cast<size_t>(n));
  std::vector<bool> kept(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = kPi + 2.0 * kPi * i / n;
    grid[i] = {c * (1.0 + std::cos(theta)), c * std::sin(theta)};
    kept[i] = curve.sign != CurvatureSign::hyperbolic ||
              grid[i].x * grid[i].x + grid[i].y * grid[i].y <
                  1.0 - kProperMargin;
  }
  // Emit the surviving arc in contiguous order: start just after a gap so
  // polylines drawn through the list never jump across the absolute.
  int start = 0;
  for (int i = 0; i < n; ++i)
    if (kept[i] && !kept[(i + n - 1) % n]) {
      start = i;
      break;
    }
  for (int i = 0; i < n; ++i) {
    const int j = (start + i) % n;
    if (kept[j]) points.push_back(grid[j]);
  }
  return points;
}

int count_absolute_intersections(const QuadraticCurve& curve) {
  const double c = canonical_coeff(curve);
  if (curve.sign == CurvatureSign::elliptic) {
    // Ideal-line substitution x3 = 0 leaves x^2 + y^2 = 0: no real point.
    return 0;
  }
  // Substituting x^2 + y^2 = 1 into the curve leaves 1 - 2cx = 0.
  if (c == 0.0) return 0;
  const double x = 1.0 / (2.0 * c);
  const double disc = 1.0 - x * x;
  // The discriminant moves four times as fast as |c| across the tangency.
  if (std::fabs(disc) <= 4.0 * kBoundaryTol) return 1;
  return disc > 0.0 ? 2 : 0;
}

ConicClass classify(const QuadraticCurve& curve) {
  if (curve.kind == CurveKind::line) {
    // The axis meets the absolute twice (hyperbolic) or the ideal line once.
    return {ConicTag::line,
            curve.sign == CurvatureSign::hyperbolic ? 2 : 1};
  }

  const int direct = count_absolute_intersections(curve);
  if (curve.sign == CurvatureSign::elliptic) {
    if (direct != 0)
      throw std::logic_error("classify: elliptic conic met the ideal line");
    return {ConicTag::ellipse, 0};
  }

  const double c = std::fabs(canonical_coeff(curve));
  int reduced;
  if (std::fabs(c - 0.5) <= kBoundaryTol)
    reduced = 1;
  else
    reduced = c > 0.5 ? 2 : 0;
  if (reduced != direct)
    throw std::logic_error("classify: |c| reduction disagrees with the intersection solver");

  switch (reduced) {
    case 0: return {ConicTag::ellipse, 0};
    case 1: return {ConicTag::paracycle, 1};
    default: return {ConicTag::semi_hyperbola, 2};
  }
}

QuadraticCurve pull_back(const QuadraticCurve& canonical,
                         const Isometry& frame) {
  QuadraticCurve out = canonical;
  out.q = frame.matrix.transpose() * canonical.q * frame.matrix;
  // Symmetrize away the last-bit asymmetry of the congruence product.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double s = 0.5 * (out.q.m[i][j] + out.q.m[j][i]);
      out.q.m[i][j] = s;
      out.q.m[j][i] = s;
    }
  return out;
}

}  // namespace apo
