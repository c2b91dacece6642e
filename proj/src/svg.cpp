#include "falkit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace falkit {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  // trim trailing zeros for shorter output, keep it deterministic
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

std::string open_svg(double x, double y, double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         num(x) + " " + num(y) + " " + num(w) + " " + num(h) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\">\n";
}

}  // namespace

std::string render_svg(const CuspTiling& tiling) {
  constexpr double unit = 60.0;
  constexpr double margin = 20.0;
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& r : tiling.rectangles) {
    lo = std::min(lo, r.offset);
    hi = std::max(hi, r.offset + 1);
  }
  if (tiling.rectangles.empty()) lo = hi = 0;
  const double width = unit * static_cast<double>(tiling.columns()) + 2 * margin;
  const double height = unit * (hi - lo) + 2 * margin;
  // y grows downwards in SVG; offsets grow upwards on the cusp
  auto sx = [&](double x) { return margin + unit * x; };
  auto sy = [&](double y) { return margin + unit * (hi - y); };

  std::string out = open_svg(0, 0, width, height);
  out += "<title>cusp " + escape(tiling.component) + "</title>\n";
  out += "<style>.tile{stroke:none}.upper{fill:#f4f4f4}.lower{fill:#dcdcdc}"
         ".black-side{stroke:#000;stroke-width:3}.white-side{stroke:#888;stroke-width:1.5}</style>\n";
  for (const auto& r : tiling.rectangles) {
    const double x0 = sx(static_cast<double>(r.column)), x1 = sx(static_cast<double>(r.column) + 1);
    const double y0 = sy(r.offset + 1), y1 = sy(r.offset);
    out += "<rect class=\"tile " + std::string(r.layer == Layer::Upper ? "upper" : "lower") + "\" id=\"" +
           escape(r.id) + "\" x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(x1 - x0) +
           "\" height=\"" + num(y1 - y0) + "\"/>\n";
    for (double x : {x0, x1})
      out += "<line class=\"black-side\" x1=\"" + num(x) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(y1) + "\"/>\n";
    for (double y : {y0, y1})
      out += "<line class=\"white-side\" x1=\"" + num(x0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x1) +
             "\" y2=\"" + num(y) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_svg(const Packing& packing) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (std::size_t v = 0; v < packing.radii.size(); ++v) {
    const auto& c = packing.centers[v];
    const double r = packing.radii[v];
    if (v == 0) {
      xmin = c.x() - r, xmax = c.x() + r, ymin = c.y() - r, ymax = c.y() + r;
    }
    xmin = std::min(xmin, c.x() - r), xmax = std::max(xmax, c.x() + r);
    ymin = std::min(ymin, c.y() - r), ymax = std::max(ymax, c.y() + r);
  }
  const double size = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double scale = 400.0 / size;
  const double margin = 10.0;
  auto sx = [&](double x) { return margin + scale * (x - xmin); };
  auto sy = [&](double y) { return margin + scale * (ymax - y); };

  std::string out = open_svg(0, 0, scale * (xmax - xmin) + 2 * margin, scale * (ymax - ymin) + 2 * margin);
  out += "<style>.disk{fill:none;stroke:#1f4e79;stroke-width:1}.boundary{stroke:#b03030}"
         ".tangency{fill:#000}</style>\n";
  for (std::size_t v = 0; v < packing.radii.size(); ++v) {
    out += "<circle class=\"disk" + std::string(packing.boundary[v] ? " boundary" : "") + "\" id=\"" +
           escape(packing.vertices[v]) + "\" cx=\"" + num(sx(packing.centers[v].x())) + "\" cy=\"" +
           num(sy(packing.centers[v].y())) + "\" r=\"" + num(scale * packing.radii[v]) + "\"/>\n";
  }
  for (const auto& e : packing.edges) {
    const auto& a = packing.centers[e[0]];
    const auto& b = packing.centers[e[1]];
    const double ra = packing.radii[e[0]], rb = packing.radii[e[1]];
    const Eigen::Vector2d p = a + (b - a) * (ra / (ra + rb));
    out += "<circle class=\"tangency\" cx=\"" + num(sx(p.x())) + "\" cy=\"" + num(sy(p.y())) + "\" r=\"2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace falkit
