#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "apollonius/apollonius.hpp"
#include "apollonius/verify.hpp"

using namespace apo;

namespace {

const CurvatureSign kBoth[] = {CurvatureSign::hyperbolic,
                               CurvatureSign::elliptic};

// Scalar bisection on [lo, hi] for a continuous function with a sign change.
template <typename F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("arc ratio residual") {
  const HomogeneousPoint a = HomogeneousPoint::chart(0.3, 0.0);
  const HomogeneousPoint b = HomogeneousPoint::chart(-0.3, 0.0);
  for (CurvatureSign sign : kBoth) {
    // Equidistant point with k = 1.
    CHECK(std::fabs(arc_ratio_residual(HomogeneousPoint::chart(0.0, 0.25), a,
                                       b, 1.0, sign)) < 1e-14);
    // P = A leaves -k d(B, A).
    const double d = distance(a, b, sign);
    CHECK(std::fabs(arc_ratio_residual(a, a, b, 2.0, sign) + 2.0 * d) < 1e-14);
  }

  // Off the axis the sine-ratio curve is NOT the arc-ratio curve.
  const CurvatureSign sign = CurvatureSign::hyperbolic;
  const ApolloniusSpec spec{1.4, 0.3, sign};
  const CanonicalFoci foci = canonical_foci(spec);
  const HomogeneousPoint fa = HomogeneousPoint::chart(foci.a, 0.0);
  const HomogeneousPoint fb = HomogeneousPoint::chart(foci.b, 0.0);
  double off_axis_residual = 0.0;
  for (const Vec2& p : sample_curve(apollonius_curve(spec), 64)) {
    if (std::fabs(p.y) < 0.2) continue;
    off_axis_residual = std::max(
        off_axis_residual,
        std::fabs(arc_ratio_residual(HomogeneousPoint::chart(p.x, p.y), fa,
                                     fb, 0.3, sign)));
  }
  CHECK(off_axis_residual > 1e-9);
}

TEST_CASE("tracing the arc-distance locus") {
  std::mt19937 rng(41);
  for (CurvatureSign sign : kBoth) {
    const HomogeneousPoint a = HomogeneousPoint::chart(0.25, 0.1);
    const HomogeneousPoint b = HomogeneousPoint::chart(-0.2, -0.05);
    const double d = distance(a, b, sign);

    SUBCASE("the ray through B crosses at the internal division point") {
      for (double k : {0.4, 2.5}) {
        const auto rays = trace_arc_apollonius(a, b, k, sign, 8);
        REQUIRE(rays.size() == 8);
        // Direction 0 points at B; the 1-D equation s = k (d - s) gives the
        // division point.
        REQUIRE(rays[0].root_distance.has_value());
        CHECK(std::fabs(*rays[0].root_distance - k * d / (1.0 + k)) < 1e-9);
        for (const auto& r : rays)
          if (r.root_distance) CHECK(std::fabs(r.residual) < 1e-10);
      }
    }

    SUBCASE("k < 1 surrounds A: every ray finds a root") {
      const auto rays = trace_arc_apollonius(a, b, 0.5, sign, 16);
      for (const auto& r : rays) CHECK(r.root_distance.has_value());
      // The away-pointing ray solves s = k (d + s).
      CHECK(std::fabs(*rays[8].root_distance - 0.5 * d / (1.0 - 0.5)) < 1e-9);
    }

    SUBCASE("k > 1: rays away from B never cross") {
      const auto rays = trace_arc_apollonius(a, b, 3.0, sign, 16);
      CHECK(rays[0].root_distance.has_value());
      CHECK(!rays[8].root_distance.has_value());
    }
  }

  SUBCASE("near k = 1 the locus approaches the bisector") {
    const CurvatureSign sign = CurvatureSign::hyperbolic;
    const HomogeneousPoint a = HomogeneousPoint::chart(0.3, 0.0);
    const HomogeneousPoint b = HomogeneousPoint::chart(-0.3, 0.0);
    const double d = distance(a, b, sign);
    for (double k : {1.001, 0.999}) {
      const auto rays = trace_arc_apollonius(a, b, k, sign, 4);
      REQUIRE(rays[0].root_distance.has_value());
      CHECK(std::fabs(*rays[0].root_distance - d / 2.0) < 0.01);
    }
  }
}

TEST_CASE("both 1-D locus equations agree with scalar bisection on the axis") {
  // Both axis crossings (x = 0 and x = 2c) must be proper: |2c| < 1.
  const CurvatureSign sign = CurvatureSign::hyperbolic;
  const ApolloniusSpec spec{0.6, 0.45, sign};
  const CanonicalFoci foci = canonical_foci(spec);
  const HomogeneousPoint fa = HomogeneousPoint::chart(foci.a, 0.0);
  const HomogeneousPoint fb = HomogeneousPoint::chart(foci.b, 0.0);

  // Sine-ratio equation along the axis: roots must be x = 0 and x = 2c.
  auto ratio_eq = [&](double x) {
    const HomogeneousPoint p = HomogeneousPoint::chart(x, 0.0);
    return s_fn(distance(fa, p, sign), sign) -
           spec.k * s_fn(distance(fb, p, sign), sign);
  };
  const double c = curve_center_coeff(spec);
  const double root1 = bisect(ratio_eq, -0.05, 0.07);
  const double root2 = bisect(ratio_eq, 2.0 * c - 0.05, 2.0 * c + 0.07);
  CHECK(std::fabs(root1 - 0.0) < 1e-10);
  CHECK(std::fabs(root2 - 2.0 * c) < 1e-10);

  // Arc-ratio equation along the ray toward B, against the trace result.
  const double d = distance(fa, fb, sign);
  const auto rays = trace_arc_apollonius(fa, fb, spec.k, sign, 1);
  REQUIRE(rays[0].root_distance.has_value());
  auto arc_1d = [&](double s) { return s - spec.k * (d - s); };
  const double arc_root = bisect(arc_1d, 0.0, d);
  CHECK(std::fabs(*rays[0].root_distance - arc_root) < 1e-10);
}

TEST_CASE("euclidean apollonius baseline") {
  SUBCASE("k = 1 is the perpendicular bisector") {
    const auto result = euclid_apollonius({-1.0, 0.0}, {1.0, 0.0}, 1.0);
    CHECK(result.is_line);
    CHECK(result.line_point.x == 0.0);
    CHECK(std::fabs(result.line_dir.x) < 1e-15);
    CHECK(std::fabs(std::fabs(result.line_dir.y) - 1.0) < 1e-15);
  }

  SUBCASE("textbook division points") {
    const auto result = euclid_apollonius({0.0, 0.0}, {3.0, 0.0}, 2.0);
    CHECK(!result.is_line);
    CHECK(result.circle.center.x == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(result.circle.center.y == 0.0);
    CHECK(result.circle.radius == doctest::Approx(2.0).epsilon(1e-15));
  }

  SUBCASE("sampled circle points have the stated distance ratio") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> ratio(0.2, 4.0);
    for (int i = 0; i < 50; ++i) {
      const Vec2 a{coord(rng), coord(rng)};
      Vec2 b{coord(rng), coord(rng)};
      while (std::hypot(a.x - b.x, a.y - b.y) < 0.1) b = {coord(rng), coord(rng)};
      double k = ratio(rng);
      while (std::fabs(k - 1.0) < 1e-3) k = ratio(rng);
      const auto result = euclid_apollonius(a, b, k);
      for (int j = 0; j < 32; ++j) {
        const double phi = 2.0 * kPi * j / 32;
        const Vec2 p{result.circle.center.x + result.circle.radius * std::cos(phi),
                     result.circle.center.y + result.circle.radius * std::sin(phi)};
        const double da = std::hypot(p.x - a.x, p.y - a.y);
        const double db = std::hypot(p.x - b.x, p.y - b.y);
        CHECK(std::fabs(da / db - k) < 1e-12);
      }
    }
  }
}

TEST_CASE("euclidean equioptic corollary on the oracle circle") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  std::uniform_real_distribution<double> rad(0.1, 0.8);
  double worst = 0.0;
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const EuclideanCircle c1{{coord(rng), coord(rng)}, rad(rng)};
    EuclideanCircle c2{{coord(rng), coord(rng)}, rad(rng)};
    while (std::hypot(c1.center.x - c2.center.x, c1.center.y - c2.center.y) <
           0.1)
      c2.center = {coord(rng), coord(rng)};
    if (std::fabs(c1.radius / c2.radius - 1.0) < 1e-3) continue;

    const auto locus =
        euclid_apollonius(c1.center, c2.center, c1.radius / c2.radius);
    for (int j = 0; j < 64; ++j) {
      const double phi = 2.0 * kPi * j / 64;
      const Vec2 p{locus.circle.center.x + locus.circle.radius * std::cos(phi),
                   locus.circle.center.y + locus.circle.radius * std::sin(phi)};
      const double d1 = std::hypot(p.x - c1.center.x, p.y - c1.center.y);
      const double d2 = std::hypot(p.x - c2.center.x, p.y - c2.center.y);
      if (d1 < c1.radius || d2 < c2.radius) continue;  // no tangents there
      worst = std::max(worst, std::fabs(euclid_viewing_angle(p, c1) -
                                        euclid_viewing_angle(p, c2)));
      ++checked;
    }
  }
  CHECK(checked > 100);
  CHECK(worst < 1e-10);
}

TEST_CASE("small-scale limit recovers the Euclidean circle") {
  const std::vector<double> scales = {1.0, 0.3, 0.1, 0.03, 0.01, 0.003, 0.001};
  for (CurvatureSign sign : kBoth) {
    const auto deviations = small_scale_limit(1.0, 2.0, sign, scales);
    REQUIRE(deviations.size() == scales.size());
    for (size_t i = 1; i < deviations.size(); ++i)
      CHECK(deviations[i] < deviations[i - 1]);
    CHECK(deviations.back() < 1e-4);
  }
}

TEST_CASE("small-scale CSV emission") {
  const std::vector<double> scales = {1.0, 0.1};
  const std::string csv = small_scale_csv(
      1.0, 2.0, {CurvatureSign::hyperbolic, CurvatureSign::elliptic}, scales);
  CHECK(csv.rfind("epsilon,d,k,lambda,deviation\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("-1,1,2,1,") != std::string::npos);
  CHECK(csv.find("+1,1,2,0.1") != std::string::npos);
}

TEST_CASE("verification suite") {
  const VerificationReport clean = run_verification_suite(42);
  CHECK(clean.seed == 42);
  CHECK(clean.checks.size() == 8);
  CHECK(clean.all_passed());

  // Negative control: a biased ratio residual must fail the suite.
  const VerificationReport biased = run_verification_suite(42, 1e-6);
  CHECK(!biased.all_passed());
}
