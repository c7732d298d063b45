#include "apollonius/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "apollonius/apollonius.hpp"

namespace apo {

namespace {

constexpr double kCanvas = 800.0;

struct Style {
  const char* label;
  const char* stroke;
  double width;
  const char* dash;  // nullptr = solid
};

// One fixed table; labels outside it fall back to the last row.
constexpr Style kStyles[] = {
    {"absolute", "#202020", 1.5, nullptr},
    {"frame", "#9a9a9a", 1.0, nullptr},
    {"curve", "#c0392b", 2.0, nullptr},
    {"pencil", "#e4a6a0", 1.0, nullptr},
    {"circle", "#2471a3", 1.5, nullptr},
    {"focus", "#101010", 1.0, nullptr},
    {"axis", "#1e8449", 1.5, "6 4"},
    {"default", "#555555", 1.0, nullptr},
};

const Style& style_for(const std::string& label) {
  for (const Style& s : kStyles)
    if (label == s.label) return s;
  return kStyles[std::size(kStyles) - 1];
}

struct Mapper {
  double window;

  double px(double x) const { return (x + window) / (2.0 * window) * kCanvas; }
  double py(double y) const { return (window - y) / (2.0 * window) * kCanvas; }
};

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  out += buf;
}

void append_polyline(std::string& out, const Mapper& map,
                     const std::vector<Vec2>& pts, const Style& st) {
  if (pts.size() < 2) return;
  out += "<polyline fill=\"none\" stroke=\"";
  out += st.stroke;
  out += "\" stroke-width=\"";
  append_num(out, st.width);
  out += "\"";
  if (st.dash) {
    out += " stroke-dasharray=\"";
    out += st.dash;
    out += "\"";
  }
  out += " points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    append_num(out, map.px(pts[i].x));
    out += ",";
    append_num(out, map.py(pts[i].y));
  }
  out += "\"/>\n";
}

}  // namespace

std::vector<Vec2> metric_circle_locus(const Circle& circle, CurvatureSign sign,
                                      int n) {
  if (n < 8) throw std::invalid_argument("metric_circle_locus: need n >= 8");
  validate(circle, sign);
  const Isometry to_center = move_to_origin(circle.center, sign).inverse();
  const double model_r = t_fn(circle.radius, sign);
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * kPi * i / n;
    pts.push_back(chart_coords(to_center.apply(HomogeneousPoint::chart(
        model_r * std::cos(phi), model_r * std::sin(phi)))));
  }
  return pts;
}

std::string render_svg(const Scene& scene) {
  if (!(scene.window > 0.0)) throw std::invalid_argument("scene: window must be positive");
  const Mapper map{scene.window};

  std::string out;
  out.reserve(1 << 16);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out += "<rect x=\"0.500000\" y=\"0.500000\" width=\"799.000000\" "
         "height=\"799.000000\" fill=\"#ffffff\" stroke=\"#9a9a9a\" "
         "stroke-width=\"1.000000\"/>\n";

  if (scene.sign == CurvatureSign::hyperbolic) {
    const Style& st = style_for("absolute");
    out += "<circle fill=\"none\" stroke=\"";
    out += st.stroke;
    out += "\" stroke-width=\"";
    append_num(out, st.width);
    out += "\" cx=\"";
    append_num(out, map.px(0.0));
    out += "\" cy=\"";
    append_num(out, map.py(0.0));
    out += "\" r=\"";
    append_num(out, kCanvas / (2.0 * scene.window));
    out += "\"/>\n";
  }

  for (const SceneElement& el : scene.elements) {
    const Style& st = style_for(el.style);
    if (const Vec2* p = std::get_if<Vec2>(&el.payload)) {
      out += "<circle fill=\"";
      out += st.stroke;
      out += "\" stroke=\"none\" cx=\"";
      append_num(out, map.px(p->x));
      out += "\" cy=\"";
      append_num(out, map.py(p->y));
      out += "\" r=\"4.000000\"/>\n";
    } else if (const Circle* c = std::get_if<Circle>(&el.payload)) {
      std::vector<Vec2> locus = metric_circle_locus(*c, scene.sign, 256);
      locus.push_back(locus.front());
      append_polyline(out, map, locus, st);
    } else if (const auto* pts = std::get_if<std::vector<Vec2>>(&el.payload)) {
      append_polyline(out, map, *pts, st);
    } else if (const SceneSegment* seg = std::get_if<SceneSegment>(&el.payload)) {
      out += "<line stroke=\"";
      out += st.stroke;
      out += "\" stroke-width=\"";
      append_num(out, st.width);
      out += "\"";
      if (st.dash) {
        out += " stroke-dasharray=\"";
        out += st.dash;
        out += "\"";
      }
      out += " x1=\"";
      append_num(out, map.px(seg->from.x));
      out += "\" y1=\"";
      append_num(out, map.py(seg->from.y));
      out += "\" x2=\"";
      append_num(out, map.px(seg->to.x));
      out += "\" y2=\"";
      append_num(out, map.py(seg->to.y));
      out += "\"/>\n";
    }
  }

  out += "</svg>\n";
  return out;
}

Scene figure_preset(std::string_view id, int samples) {
  struct Preset {
    std::string_view id;
    CurvatureSign sign;
    double d;
    double k;
    double pencil[3];
  };
  // Main parameters follow the demo captions; the pencil ratios are
  // illustrative extras sharing the same foci distance.
  static const Preset presets[] = {
      {"1l", CurvatureSign::hyperbolic, 0.65, 2.0, {0.5, 3.0, 5.0}},
      {"1r", CurvatureSign::hyperbolic, 1.4, 0.3, {0.5, 0.7, 2.0}},
      {"2l", CurvatureSign::elliptic, 0.8, 0.5, {0.3, 2.0, 3.0}},
      {"2r", CurvatureSign::elliptic, kPi / 2.0, 0.7, {0.4, 2.0, 3.0}},
  };

  const Preset* preset = nullptr;
  for (const Preset& p : presets)
    if (p.id == id) preset = &p;
  if (!preset) throw std::invalid_argument("figure_preset: unknown id");

  Scene scene;
  scene.sign = preset->sign;
  scene.window = preset->sign == CurvatureSign::hyperbolic ? 1.05 : 2.0;

  auto add_curve = [&](double k, const char* label) {
    const ApolloniusSpec spec{preset->d, k, preset->sign};
    const QuadraticCurve curve = apollonius_curve(spec);
    std::vector<Vec2> pts = sample_curve(curve, samples);
    // Close the polyline when no arc was cut away by the absolute.
    if (pts.size() == static_cast<size_t>(samples)) pts.push_back(pts.front());
    scene.elements.push_back({std::move(pts), label});
  };

  for (const double k : preset->pencil) add_curve(k, "pencil");
  add_curve(preset->k, "curve");

  const auto foci = canonical_foci({preset->d, preset->k, preset->sign});
  scene.elements.push_back({Vec2{foci.a, 0.0}, "focus"});
  scene.elements.push_back({Vec2{foci.b, 0.0}, "focus"});
  return scene;
}

}  // namespace apo
