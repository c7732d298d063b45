#include "apollonius/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "apollonius/apollonius.hpp"

namespace apo {

namespace {

constexpr double kMarchStep = 0.01;
constexpr int kBisectIters = 60;

double euclid_dist(Vec2 p, Vec2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

}  // namespace

double arc_ratio_residual(const HomogeneousPoint& p, const HomogeneousPoint& a,
                          const HomogeneousPoint& b, double k,
                          CurvatureSign sign) {
  return distance(a, p, sign) - k * distance(b, p, sign);
}

std::vector<RayTraceResult> trace_arc_apollonius(const HomogeneousPoint& a,
                                                 const HomogeneousPoint& b,
                                                 double k, CurvatureSign sign,
                                                 int n_rays) {
  if (n_rays < 1) throw std::invalid_argument("trace_arc_apollonius: n_rays < 1");
  if (k <= 0.0 || k == 1.0)
    throw std::invalid_argument("trace_arc_apollonius: need k > 0, k != 1");

  // Frame with A at the origin and B on the positive x-axis, so direction 0
  // points at B.
  const double d = distance(a, b, sign);
  const Isometry to_origin = move_to_origin(a, sign);
  const Vec2 bq = chart_coords(to_origin.apply(b));
  const Isometry frame =
      rotation_about_origin(-std::atan2(bq.y, bq.x)) * to_origin;
  const Isometry back = frame.inverse();

  const double s_max = sign == CurvatureSign::hyperbolic
                           ? d + 8.0
                           : kPi / 2.0 - 1e-9;

  std::vector<RayTraceResult> results;
  results.reserve(static_cast<size_t>(n_rays));
  for (int i = 0; i < n_rays; ++i) {
    const double theta = 2.0 * kPi * i / n_rays;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    auto point_at = [&](double s) {
      const double m = t_fn(s, sign);
      return back.apply(HomogeneousPoint::chart(m * ct, m * st));
    };
    // d(A, point_at(s)) == s by construction, so only d(B, .) is measured.
    auto residual = [&](double s) {
      return s - k * distance(b, point_at(s), sign);
    };

    RayTraceResult r;
    r.direction = theta;
    double lo = 0.0;
    double f_lo = residual(0.0);
    bool bracketed = false;
    for (double s = kMarchStep; s <= s_max; s += kMarchStep) {
      const double f = residual(s);
      if ((f_lo <= 0.0 && f >= 0.0) || (f_lo >= 0.0 && f <= 0.0)) {
        double hi = s;
        for (int it = 0; it < kBisectIters; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = residual(mid);
          if ((f_lo <= 0.0 && fm <= 0.0) || (f_lo >= 0.0 && fm >= 0.0)) {
            lo = mid;
            f_lo = fm;
          } else {
            hi = mid;
          }
        }
        const double root = 0.5 * (lo + hi);
        r.root_distance = root;
        r.residual = residual(root);
        bracketed = true;
        break;
      }
      lo = s;
      f_lo = f;
    }
    if (!bracketed) r.residual = f_lo;
    results.push_back(r);
  }
  return results;
}

EuclideanApollonius euclid_apollonius(Vec2 a, Vec2 b, double k) {
  if (k <= 0.0) throw std::invalid_argument("euclid_apollonius: k must be positive");
  const double ab = euclid_dist(a, b);
  if (ab == 0.0) throw std::invalid_argument("euclid_apollonius: coincident points");

  EuclideanApollonius result;
  if (k == 1.0) {
    result.is_line = true;
    result.line_point = {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    result.line_dir = {-(b.y - a.y) / ab, (b.x - a.x) / ab};
    return result;
  }
  // Internal and external division points of AB in ratio k span a diameter.
  const Vec2 internal = {(a.x + k * b.x) / (1.0 + k), (a.y + k * b.y) / (1.0 + k)};
  const Vec2 external = {(k * b.x - a.x) / (k - 1.0), (k * b.y - a.y) / (k - 1.0)};
  result.circle.center = {0.5 * (internal.x + external.x),
                          0.5 * (internal.y + external.y)};
  result.circle.radius = 0.5 * euclid_dist(internal, external);
  return result;
}

double euclid_viewing_angle(Vec2 p, const EuclideanCircle& circle) {
  const double d = euclid_dist(p, circle.center);
  if (d < circle.radius)
    throw std::domain_error("euclid_viewing_angle: point inside the circle");
  return 2.0 * std::asin(std::min(circle.radius / d, 1.0));
}

std::vector<double> small_scale_limit(double d, double k, CurvatureSign sign,
                                      const std::vector<double>& scales) {
  if (k == 1.0) throw std::invalid_argument("small_scale_limit: k must differ from 1");
  constexpr int kSamples = 128;

  std::vector<double> deviations;
  deviations.reserve(scales.size());
  for (const double lambda : scales) {
    if (!(lambda > 0.0))
      throw std::invalid_argument("small_scale_limit: scales must be positive");
    const ApolloniusSpec spec{lambda * d, k, sign};
    const auto foci = canonical_foci(spec);
    const auto euclid =
        euclid_apollonius({foci.a / lambda, 0.0}, {foci.b / lambda, 0.0}, k);

    double worst = 0.0;
    for (const Vec2& p : sample_curve(apollonius_curve(spec), kSamples)) {
      const Vec2 rescaled = {p.x / lambda, p.y / lambda};
      const double dev = std::fabs(euclid_dist(rescaled, euclid.circle.center) -
                                   euclid.circle.radius);
      worst = std::max(worst, dev);
    }
    deviations.push_back(worst);
  }
  return deviations;
}

std::string small_scale_csv(double d, double k,
                            const std::vector<CurvatureSign>& signs,
                            const std::vector<double>& scales) {
  std::string out = "epsilon,d,k,lambda,deviation\n";
  char row[160];
  for (const CurvatureSign sign : signs) {
    const auto deviations = small_scale_limit(d, k, sign, scales);
    for (size_t i = 0; i < scales.size(); ++i) {
      std::snprintf(row, sizeof(row), "%+d,%.17g,%.17g,%.17g,%.17g\n",
                    static_cast<int>(sign), d, k, scales[i], deviations[i]);
      out += row;
    }
  }
  return out;
}

VerificationReport run_verification_suite(unsigned seed, double perturbation) {
  VerificationReport report;
  report.seed = seed;
  std::mt19937 rng(seed);

  const std::vector<CurvatureSign> signs = {CurvatureSign::hyperbolic,
                                            CurvatureSign::elliptic};
  for (const CurvatureSign sign : signs) {
    const bool hyp = sign == CurvatureSign::hyperbolic;
    std::uniform_real_distribution<double> draw_d(0.1,
                                                  hyp ? 2.0 : kPi / 2.0 - 0.1);
    std::uniform_real_distribution<double> draw_k(0.1, 5.0);

    VerificationCheck ratio{hyp ? "sine-ratio property (hyperbolic)"
                                : "sine-ratio property (elliptic)",
                            true, 0.0, 1e-9};
    VerificationCheck identity{hyp ? "coefficient identity (hyperbolic)"
                                   : "coefficient identity (elliptic)",
                               true, 0.0, 1e-12};
    VerificationCheck coeff{hyp ? "focal vs d-form coefficient (hyperbolic)"
                                : "focal vs d-form coefficient (elliptic)",
                            true, 0.0, 1e-12};

    for (int trial = 0; trial < 100; ++trial) {
      double k = draw_k(rng);
      while (std::fabs(k - 1.0) < 1e-3) k = draw_k(rng);
      const ApolloniusSpec spec{draw_d(rng), k, sign};
      const auto foci = canonical_foci(spec);
      const HomogeneousPoint fa = HomogeneousPoint::chart(foci.a, 0.0);
      const HomogeneousPoint fb = HomogeneousPoint::chart(foci.b, 0.0);
      const QuadraticCurve curve = apollonius_curve(spec);

      for (const Vec2& p : sample_curve(curve, 256)) {
        const double r =
            sine_ratio(HomogeneousPoint::chart(p.x, p.y), fa, fb, sign);
        ratio.max_residual = std::max(
            ratio.max_residual, std::fabs(r - k) + perturbation);
      }

      const double eps = eps_of(sign);
      const double wa = 1.0 + eps * foci.a * foci.a;
      const double wb = 1.0 + eps * foci.b * foci.b;
      identity.max_residual = std::max(
          identity.max_residual,
          std::fabs(1.0 / wa - k * k / wb - (1.0 - k * k)));
      identity.max_residual = std::max(
          identity.max_residual,
          std::fabs(foci.a * foci.a / wa - k * k * foci.b * foci.b / wb));

      const double c_d = curve_center_coeff(spec);
      const double c_foci =
          (foci.a * wb - k * k * foci.b * wa) / ((1.0 - k * k) * wa * wb);
      coeff.max_residual =
          std::max(coeff.max_residual, std::fabs(c_d - c_foci));
    }

    ratio.passed = ratio.max_residual < ratio.threshold;
    identity.passed = identity.max_residual < identity.threshold;
    coeff.passed = coeff.max_residual < coeff.threshold;
    report.checks.push_back(ratio);
    report.checks.push_back(identity);
    report.checks.push_back(coeff);

    const std::vector<double> scales = {1.0, 0.3, 0.1, 0.03, 0.01, 0.003, 0.001};
    const auto deviations = small_scale_limit(1.0, 2.0, sign, scales);
    VerificationCheck limit{hyp ? "small-scale limit (hyperbolic)"
                                : "small-scale limit (elliptic)",
                            true, deviations.back(), 1e-4};
    for (size_t i = 1; i < deviations.size(); ++i)
      if (deviations[i] >= deviations[i - 1]) limit.passed = false;
    limit.passed = limit.passed && deviations.back() < limit.threshold;
    report.checks.push_back(limit);
  }
  return report;
}

}  // namespace apo
