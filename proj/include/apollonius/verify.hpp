// Independent numerical oracles: the arc-distance Apollonius locus traced
// by ray bisection, the Euclidean baseline, and the small-curvature limit
// connecting the curved curves to the Euclidean circle.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apollonius/geometry.hpp"

namespace apo {

struct EuclideanCircle {
  Vec2 center;
  double radius = 0.0;
};

/// Result of euclid_apollonius: a circle for k != 1, the perpendicular
/// bisector for k = 1.
struct EuclideanApollonius {
  bool is_line = false;
  EuclideanCircle circle;
  Vec2 line_point;
  Vec2 line_dir;
};

struct RayTraceResult {
  double direction = 0.0;                // ray angle in the A-centered frame
  std::optional<double> root_distance;   // arc length along the ray
  double residual = 0.0;                 // arc ratio residual at the root
};

/// d(A,P) - k d(B,P): zero exactly on the arc-distance (first-approach)
/// Apollonius locus.
double arc_ratio_residual(const HomogeneousPoint& p, const HomogeneousPoint& a,
                          const HomogeneousPoint& b, double k,
                          CurvatureSign sign);

/// Traces the arc-distance locus along n_rays geodesic rays out of A
/// (direction 0 pointing at B): marches in 0.01 arc-length steps, brackets
/// the first sign change of the residual and bisects it for 60 iterations.
std::vector<RayTraceResult> trace_arc_apollonius(const HomogeneousPoint& a,
                                                 const HomogeneousPoint& b,
                                                 double k, CurvatureSign sign,
                                                 int n_rays);

/// Classical Euclidean Apollonius locus of |PA|/|PB| = k.
EuclideanApollonius euclid_apollonius(Vec2 a, Vec2 b, double k);

/// Euclidean viewing angle 2 asin(r/d) of a circle from an external point.
double euclid_viewing_angle(Vec2 p, const EuclideanCircle& circle);

/// For each scale lambda: synthesizes the curved curve of (lambda d, k),
/// rescales its chart samples by 1/lambda and returns the largest distance
/// of a sample to the Euclidean Apollonius circle of the rescaled foci.
std::vector<double> small_scale_limit(double d, double k, CurvatureSign sign,
                                      const std::vector<double>& scales);

/// CSV rows (epsilon,d,k,lambda,deviation) for a small-scale sweep.
std::string small_scale_csv(double d, double k,
                            const std::vector<CurvatureSign>& signs,
                            const std::vector<double>& scales);

struct VerificationCheck {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  double threshold = 0.0;
};

struct VerificationReport {
  unsigned seed = 0;
  std::vector<VerificationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// The randomized invariant suite behind the verify command: the sine-ratio
/// defining property, the coefficient identities, the two coefficient
/// routes, and the small-scale limit, for both geometries. `perturbation`
/// is a test hook added to the ratio residuals so a negative control can
/// prove the suite is able to fail.
VerificationReport run_verification_suite(unsigned seed,
                                          double perturbation = 0.0);

}  // namespace apo
