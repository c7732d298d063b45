// Command-line surface: generalized Apollonius curves, equioptic curves,
// verification sweeps and SVG figures.
//
//   apollonius            --geometry hyperbolic --d 0.65 --k 2
//   apollonius equioptic  --geometry hyperbolic --c1 0.3,0.2,0.4 --c2 -0.25,-0.1,0.25
//   apollonius verify     [--seed 42] [--sweep small-scale --d 1 --k 2]
//   apollonius render     --figure 1l --out fig.svg   (or: render curve.json)

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apollonius/apollonius.hpp"
#include "apollonius/equioptic.hpp"
#include "apollonius/json_io.hpp"
#include "apollonius/render.hpp"
#include "apollonius/verify.hpp"

namespace {

using nlohmann::json;

// Decimal literals plus the "pi/2" token for the elliptic boundary.
double parse_real(const std::string& text) {
  if (text == "pi/2") return apo::kPi / 2.0;
  size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

apo::CurvatureSign parse_geometry(const std::string& text) {
  if (text == "hyperbolic") return apo::CurvatureSign::hyperbolic;
  if (text == "elliptic") return apo::CurvatureSign::elliptic;
  throw std::invalid_argument("geometry must be 'hyperbolic' or 'elliptic'");
}

apo::Circle parse_circle(const std::string& text, apo::CurvatureSign sign) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3)
    throw std::invalid_argument("circle spec must be 'x,y,r': '" + text + "'");
  apo::Circle circle{apo::HomogeneousPoint::chart(parse_real(parts[0]),
                                                  parse_real(parts[1])),
                     parse_real(parts[2])};
  apo::validate(circle, sign);
  return circle;
}

// Output is assembled in memory first so a failed run never leaves a
// partial file behind.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int cmd_apollonius(CLI::App& app, int argc, const char* const* argv) {
  std::string geometry, d_text, k_text, out_path, format = "json";
  int n = 256;
  app.add_option("--geometry", geometry, "hyperbolic or elliptic")->required();
  app.add_option("--d", d_text, "foci distance (accepts pi/2)")->required();
  app.add_option("--k", k_text, "circumference ratio")->required();
  app.add_option("--n", n, "number of curve samples");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "output format (json)");
  app.parse(argc, argv);

  if (format != "json") throw std::invalid_argument("apollonius emits json only");
  if (n < 3) throw std::invalid_argument("--n must be at least 3");
  const apo::ApolloniusSpec spec{parse_real(d_text), parse_real(k_text),
                                 parse_geometry(geometry)};
  apo::validate(spec);
  write_output(out_path, apo::curve_document(spec, n).dump(2) + "\n");
  return 0;
}

int cmd_equioptic(CLI::App& app, int argc, const char* const* argv) {
  std::string geometry, c1_text, c2_text, out_path, format = "json";
  int n = 256;
  app.add_option("--geometry", geometry, "hyperbolic or elliptic")->required();
  app.add_option("--c1", c1_text, "first circle as x,y,r")->required();
  app.add_option("--c2", c2_text, "second circle as x,y,r")->required();
  app.add_option("--n", n, "number of curve samples");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "output format (json)");
  app.parse(argc, argv);

  if (format != "json") throw std::invalid_argument("equioptic emits json only");
  if (n < 3) throw std::invalid_argument("--n must be at least 3");
  const apo::CurvatureSign sign = parse_geometry(geometry);
  const apo::Circle c1 = parse_circle(c1_text, sign);
  const apo::Circle c2 = parse_circle(c2_text, sign);
  write_output(out_path, apo::equioptic_document(c1, c2, sign, n).dump(2) + "\n");
  return 0;
}

int cmd_verify(CLI::App& app, int argc, const char* const* argv) {
  std::string sweep, d_text = "1", k_text = "2", out_path, format = "text";
  unsigned seed = 42;
  bool perturb = false;
  app.add_option("--sweep", sweep, "named sweep: small-scale");
  app.add_option("--d", d_text, "sweep foci distance");
  app.add_option("--k", k_text, "sweep ratio");
  app.add_option("--seed", seed, "random seed for the property suite");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "text, csv or json");
  app.add_flag("--inject-perturbation", perturb,
               "test hook: bias residuals so the suite must fail");
  app.parse(argc, argv);

  if (!sweep.empty()) {
    if (sweep != "small-scale")
      throw std::invalid_argument("unknown sweep: '" + sweep + "'");
    const std::vector<double> scales = {1.0, 0.3, 0.1, 0.03, 0.01, 0.003, 0.001};
    write_output(out_path,
                 apo::small_scale_csv(parse_real(d_text), parse_real(k_text),
                                      {apo::CurvatureSign::hyperbolic,
                                       apo::CurvatureSign::elliptic},
                                      scales));
    return 0;
  }

  const apo::VerificationReport report =
      apo::run_verification_suite(seed, perturb ? 1e-6 : 0.0);

  std::string out;
  if (format == "json") {
    json doc;
    doc["seed"] = report.seed;
    doc["passed"] = report.all_passed();
    doc["checks"] = json::array();
    for (const auto& c : report.checks)
      doc["checks"].push_back({{"name", c.name},
                               {"passed", c.passed},
                               {"max_residual", c.max_residual},
                               {"threshold", c.threshold}});
    out = doc.dump(2) + "\n";
  } else if (format == "csv") {
    out = "name,passed,max_residual,threshold\n";
    char row[256];
    for (const auto& c : report.checks) {
      std::snprintf(row, sizeof(row), "\"%s\",%d,%.17g,%.17g\n", c.name.c_str(),
                    c.passed ? 1 : 0, c.max_residual, c.threshold);
      out += row;
    }
  } else if (format == "text") {
    char line[256];
    std::snprintf(line, sizeof(line), "verification suite (seed %u)\n",
                  report.seed);
    out = line;
    int passed = 0;
    for (const auto& c : report.checks) {
      passed += c.passed ? 1 : 0;
      std::snprintf(line, sizeof(line), "  [%s] %-42s max residual %.3e (< %.0e)\n",
                    c.passed ? "pass" : "FAIL", c.name.c_str(), c.max_residual,
                    c.threshold);
      out += line;
    }
    std::snprintf(line, sizeof(line), "%d/%zu checks passed\n", passed,
                  report.checks.size());
    out += line;
  } else {
    throw std::invalid_argument("unknown format: '" + format + "'");
  }

  write_output(out_path, out);
  return report.all_passed() ? 0 : 1;
}

int cmd_render(CLI::App& app, int argc, const char* const* argv) {
  std::string input, figure, out_path, format = "svg";
  int n = 256;
  app.add_option("input", input, "curve/equioptic JSON document to draw");
  app.add_option("--figure", figure, "preset id: 1l, 1r, 2l or 2r");
  app.add_option("--n", n, "samples for preset curves");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "output format (svg)");
  app.parse(argc, argv);

  if (format != "svg") throw std::invalid_argument("render emits svg only");

  apo::Scene scene;
  if (!figure.empty()) {
    scene = apo::figure_preset(figure, n);
  } else if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot read input file: " + input);
    json doc;
    in >> doc;
    scene = apo::scene_from_document(doc);
  } else {
    throw std::invalid_argument("render needs --figure or an input document");
  }
  write_output(out_path, apo::render_svg(scene));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::string mode = "apollonius";
  int skip = 0;
  if (argc > 1) {
    const std::string first = argv[1];
    if (first == "apollonius" || first == "equioptic" || first == "verify" ||
        first == "render") {
      mode = first;
      skip = 1;
    }
  }

  CLI::App app{"Generalized Apollonius and equioptic curves of the "
               "constant-curvature planes"};
  try {
    if (mode == "equioptic") return cmd_equioptic(app, argc - skip, argv + skip);
    if (mode == "verify") return cmd_verify(app, argc - skip, argv + skip);
    if (mode == "render") return cmd_render(app, argc - skip, argv + skip);
    return cmd_apollonius(app, argc - skip, argv + skip);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
