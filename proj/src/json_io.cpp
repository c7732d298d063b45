#include "apollonius/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace apo {

namespace {

using nlohmann::json;

json matrix_to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back({m.m[i][0], m.m[i][1], m.m[i][2]});
  return rows;
}

json points_to_json(const std::vector<Vec2>& pts) {
  json arr = json::array();
  for (const Vec2& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

std::vector<Vec2> points_from_json(const json& arr) {
  std::vector<Vec2> pts;
  pts.reserve(arr.size());
  for (const auto& p : arr)
    pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return pts;
}

CurvatureSign sign_from_epsilon(int epsilon) {
  if (epsilon == -1) return CurvatureSign::hyperbolic;
  if (epsilon == +1) return CurvatureSign::elliptic;
  throw std::invalid_argument("document: epsilon must be -1 or +1");
}

}  // namespace

json curve_document(const ApolloniusSpec& spec, int n_samples) {
  validate(spec);
  const CanonicalFoci foci = canonical_foci(spec);
  const QuadraticCurve curve = apollonius_curve(spec);
  const ConicClass cls = classify(curve);

  json doc;
  doc["epsilon"] = static_cast<int>(spec.sign);
  doc["d"] = spec.d;
  doc["k"] = spec.k;
  doc["a"] = foci.a;
  doc["b"] = foci.b;
  doc["kind"] = curve.kind == CurveKind::line ? "line" : "conic";
  if (curve.kind == CurveKind::conic) doc["c"] = curve_center_coeff(spec);
  doc["class"] = to_string(cls.tag);
  doc["matrix"] = matrix_to_json(curve.q);
  doc["samples"] = points_to_json(sample_curve(curve, n_samples));
  return doc;
}

json equioptic_document(const Circle& c1, const Circle& c2,
                        CurvatureSign sign, int n_samples) {
  const EquiopticResult result = equioptic_curve(c1, c2, sign);
  const ApolloniusSpec spec{result.d, result.k, sign};
  const CanonicalFoci foci = canonical_foci(spec);
  const QuadraticCurve canonical = apollonius_curve(spec);
  const ConicClass cls = classify(canonical);

  const std::vector<Vec2> samples = sample_equioptic(result, n_samples);
  const std::vector<Vec2> valid =
      filter_valid_equioptic_points(samples, c1, c2, sign);

  double max_residual = 0.0;
  for (const Vec2& p : valid) {
    const HomogeneousPoint hp = HomogeneousPoint::chart(p.x, p.y);
    const double a1 = viewing_angle(hp, c1, sign);
    const double a2 = viewing_angle(hp, c2, sign);
    max_residual = std::max(max_residual, std::fabs(a1 - a2));
  }

  json doc;
  doc["epsilon"] = static_cast<int>(sign);
  doc["d"] = result.d;
  doc["k"] = result.k;
  doc["a"] = foci.a;
  doc["b"] = foci.b;
  doc["kind"] = result.curve.kind == CurveKind::line ? "line" : "conic";
  if (result.curve.kind == CurveKind::conic)
    doc["c"] = curve_center_coeff(spec);
  doc["class"] = to_string(cls.tag);
  doc["matrix"] = matrix_to_json(result.curve.q);
  doc["samples"] = points_to_json(samples);
  doc["circles"] = json::array();
  for (const Circle* c : {&c1, &c2}) {
    const Vec2 center = chart_coords(c->center);
    doc["circles"].push_back(
        {{"center", {center.x, center.y}}, {"radius", c->radius}});
  }
  doc["frame"] = matrix_to_json(result.frame.matrix);
  doc["valid_samples"] = points_to_json(valid);
  doc["max_angle_residual"] = max_residual;
  return doc;
}

Scene scene_from_document(const json& doc) {
  Scene scene;
  scene.sign = sign_from_epsilon(doc.at("epsilon").get<int>());
  scene.window = scene.sign == CurvatureSign::hyperbolic ? 1.05 : 2.0;

  std::vector<Vec2> samples = points_from_json(doc.at("samples"));
  // Closed loci (nothing was filtered away) are drawn closed. Elliptic
  // conics and hyperbolic ellipses never lose samples to the absolute.
  const std::string cls = doc.at("class").get<std::string>();
  const bool closed =
      cls == "Ellipse" && !samples.empty();
  if (closed) samples.push_back(samples.front());
  scene.elements.push_back({std::move(samples), "curve"});

  if (doc.contains("circles")) {
    for (const auto& cj : doc.at("circles")) {
      const Vec2 center = {cj.at("center").at(0).get<double>(),
                           cj.at("center").at(1).get<double>()};
      scene.elements.push_back(
          {Circle{HomogeneousPoint::chart(center.x, center.y),
                  cj.at("radius").get<double>()},
           "circle"});
      scene.elements.push_back({center, "focus"});
    }
  } else {
    scene.elements.push_back({Vec2{doc.at("a").get<double>(), 0.0}, "focus"});
    scene.elements.push_back({Vec2{doc.at("b").get<double>(), 0.0}, "focus"});
  }
  return scene;
}

}  // namespace apo
