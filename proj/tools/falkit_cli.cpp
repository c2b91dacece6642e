// falkit command line: validate, report, cusp, pack.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "falkit/cusp.hpp"
#include "falkit/diagram_io.hpp"
#include "falkit/nerve.hpp"
#include "falkit/packing.hpp"
#include "falkit/report.hpp"
#include "falkit/svg.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kNoConvergence = 3 };

void print_violations(const falkit::ValidationReport& report) {
  for (const auto& v : report.violations) std::cerr << "invalid: " << v.code << ": " << v.message << "\n";
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

int run_validate(const falkit::FALDiagram& d) {
  const auto report = falkit::validate(d);
  if (report.ok()) {
    std::cout << "valid = true\n";
    return kOk;
  }
  std::cout << "valid = false\n";
  for (std::size_t i = 0; i < report.violations.size(); ++i)
    std::cout << "violation." << i << " = " << report.violations[i].code << ": " << report.violations[i].message
              << "\n";
  return kInvalid;
}

int run_report(const falkit::FALDiagram& d, std::optional<int> dehn, int slopes, bool text) {
  falkit::ReportOptions options;
  options.dehn_m = dehn;
  options.slopes = slopes;
  const auto report = falkit::make_report(d, options);
  std::cout << (text ? falkit::render_text(report) : falkit::render_tree(report));
  return report.valid ? kOk : kInvalid;
}

int run_cusp(const falkit::FALDiagram& d, const std::string& component, const std::string& svg) {
  const auto report = falkit::validate(d);
  if (!report.ok()) {
    print_violations(report);
    return kInvalid;
  }
  const auto resolved = falkit::resolve_components(d);
  const auto tiling = falkit::cusp_tiling(d, resolved, component);
  std::cout << "cusp.component = " << tiling.component << "\n"
            << "cusp.kind = " << (tiling.crossing_circle ? "crossing_circle" : "surface_knot") << "\n"
            << "cusp.columns = " << tiling.columns() << "\n"
            << "cusp.rectangles = " << tiling.rectangles.size() << "\n"
            << "cusp.meridian = " << falkit::to_string(tiling.meridian) << "\n"
            << "cusp.longitude = " << falkit::to_string(tiling.longitude) << "\n";
  for (std::size_t i = 0; i < tiling.rectangles.size(); ++i) {
    const auto& r = tiling.rectangles[i];
    const auto p = "cusp.rectangle." + std::to_string(i);
    std::cout << p << ".id = " << r.id << "\n"
              << p << ".column = " << r.column << "\n"
              << p << ".layer = " << (r.layer == falkit::Layer::Upper ? "upper" : "lower") << "\n"
              << p << ".offset = " << r.offset << "\n"
              << p << ".black_sides = " << r.black_sides[0] << " " << r.black_sides[1] << "\n"
              << p << ".white_sides = " << r.white_sides[0] << " " << r.white_sides[1] << "\n";
  }
  if (!svg.empty() && !write_file(svg, falkit::render_svg(tiling))) {
    std::cerr << "error: cannot write " << svg << "\n";
    return kInvalid;
  }
  return kOk;
}

int run_pack(const falkit::FALDiagram& d, double tol, std::size_t max_sweeps, const std::string& svg) {
  const auto report = falkit::validate(d);
  if (!report.ok()) {
    print_violations(report);
    return kInvalid;
  }
  const auto nerve = falkit::nerve_from_diagram(d);
  falkit::PackingOptions options;
  options.tolerance = tol;
  options.max_sweeps = max_sweeps;
  const auto packing = falkit::solve_packing(nerve, options);
  std::cout << "packing.vertices = " << nerve.vertices.size() << "\n"
            << "packing.edges = " << falkit::nerve_edges(nerve).size() << "\n"
            << "packing.triangles = " << nerve.triangles.size() << "\n"
            << "packing.sweeps = " << packing.sweeps << "\n"
            << "packing.max_angle_residual = " << falkit::format_real(packing.max_angle_residual) << "\n"
            << "packing.max_tangency_residual = " << falkit::format_real(packing.max_tangency_residual) << "\n";
  for (std::size_t v = 0; v < packing.vertices.size(); ++v) {
    const auto p = "packing.circle." + packing.vertices[v];
    std::cout << p << ".radius = " << falkit::format_real(packing.radii[v]) << "\n"
              << p << ".center = " << falkit::format_real(packing.centers[v].x()) << " "
              << falkit::format_real(packing.centers[v].y()) << "\n"
              << p << ".boundary = " << (packing.boundary[v] ? "true" : "false") << "\n";
  }
  if (!svg.empty() && !write_file(svg, falkit::render_svg(packing))) {
    std::cerr << "error: cannot write " << svg << "\n";
    return kInvalid;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"falkit: fully augmented link diagrams on surfaces"};
  app.require_subcommand(1);

  std::string file, component, svg;
  std::optional<int> dehn;
  int slopes = 10;
  bool text = false;
  double tol = 1e-10;
  std::size_t max_sweeps = falkit::PackingOptions{}.max_sweeps;

  auto* validate = app.add_subcommand("validate", "check a diagram file");
  validate->add_option("file", file, "diagram file")->required();

  auto* report = app.add_subcommand("report", "structured report of every bound and tiling");
  report->add_option("file", file, "diagram file")->required();
  report->add_option("--dehn", dehn, "crossings added per circle (m >= 7)");
  report->add_option("--slopes", slopes, "slope-bound table size")->check(CLI::NonNegativeNumber);
  report->add_flag("--text", text, "grouped human-readable output");

  auto* cusp = app.add_subcommand("cusp", "rectangle tiling of one cusp");
  cusp->add_option("file", file, "diagram file")->required();
  cusp->add_option("--component", component, "component id")->required();
  cusp->add_option("--svg", svg, "write an SVG drawing");

  auto* pack = app.add_subcommand("pack", "circle packing of the white-region nerve");
  pack->add_option("file", file, "diagram file")->required();
  pack->add_option("--tol", tol, "angle tolerance in (0, 1e-4]");
  pack->add_option("--max-sweeps", max_sweeps, "iteration cap");
  pack->add_option("--svg", svg, "write an SVG drawing");

  CLI11_PARSE(app, argc, argv);

  falkit::FALDiagram diagram;
  try {
    diagram = falkit::load_diagram(file);
  } catch (const falkit::ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kParse;
  } catch (const falkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (*validate) return run_validate(diagram);
    if (*report) return run_report(diagram, dehn, slopes, text);
    if (*cusp) return run_cusp(diagram, component, svg);
    return run_pack(diagram, tol, max_sweeps, svg);
  } catch (const falkit::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const falkit::ValidationError& e) {
    print_violations(e.report());
    return kInvalid;
  } catch (const falkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
