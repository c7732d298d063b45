// Deterministic SVG rendering of model scenes: the absolute, foci, metric
// circles and sampled loci, in a square chart viewport.

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "apollonius/equioptic.hpp"
#include "apollonius/geometry.hpp"

namespace apo {

struct SceneSegment {
  Vec2 from;
  Vec2 to;
};

struct SceneElement {
  // point, metric circle, sampled locus or straight chart segment.
  std::variant<Vec2, Circle, std::vector<Vec2>, SceneSegment> payload;
  std::string style;  // label looked up in a fixed style table
};

struct Scene {
  CurvatureSign sign = CurvatureSign::hyperbolic;
  double window = 1.05;  // chart half-width of the square viewport
  std::vector<SceneElement> elements;
};

/// n chart points of the model locus of a metric circle: the chart circle
/// of radius T(r) about the origin carried to the center by an isometry.
std::vector<Vec2> metric_circle_locus(const Circle& circle, CurvatureSign sign,
                                      int n);

/// 800x800 SVG document; numeric attributes carry six decimals, identical
/// scenes yield byte-identical output. Hyperbolic scenes always show the
/// absolute.
std::string render_svg(const Scene& scene);

/// Demo scenes 1l, 1r (hyperbolic, d = 0.65 / k = 2 and d = 1.4 / k = 0.3)
/// and 2l, 2r (elliptic, d = 0.8 / k = 0.5 and d = pi/2 / k = 0.7), each
/// with an illustrative pencil of further ratios.
Scene figure_preset(std::string_view id, int samples = 256);

}  // namespace apo
