#include <doctest.h>

#include <cstdlib>
#include <regex>

#include "falkit/report.hpp"
#include "falkit/svg.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace falkit;
using namespace falkit::testing;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("borromean report") {
  const auto r = make_report(load_example("borromean.fal"));
  CHECK(r.valid);
  CHECK(r.failed_sections.empty());
  CHECK(r.at("diagram.crossing_circles") == "2");
  CHECK(r.at("diagram.chi") == "1");
  CHECK(std::abs(std::stod(r.at("volume.lower_bound")) - 7.3277248) < 1e-6);
  CHECK(r.at("cusps.count") == "3");
  CHECK(r.at("cusps.0.rectangles") == "2");
  CHECK(r.at("cusps.1.rectangles") == "2");
  CHECK(r.at("cusps.2.rectangles") == "8");
  CHECK(r.at("cusps.total_rectangles") == "12");
  CHECK(r.at("components.2.n") == "4");
  CHECK(r.at("packing.status") == "ok");
  CHECK(r.at("packing.vertices") == "4");
  CHECK(r.at("volume.hyperbolic_assumed") == "true");
  CHECK(r.has("volume.upper_bound_note"));
  CHECK(r.at("slopes.count") == "10");
  CHECK(r.has("slopes.10.length_lower_bound"));
}

TEST_CASE("torus chain report") {
  ReportOptions opt;
  opt.dehn_m = 7;
  opt.slopes = 0;
  const auto r = make_report(load_example("torus_chain.fal"), opt);
  CHECK(std::abs(std::stod(r.at("volume.lower_bound")) - 7.3277248) < 1e-6);
  CHECK(std::abs(std::stod(r.at("volume.upper_bound")) - 10.1494161) < 1e-6);
  CHECK(r.at("volume.cellular_verified") == "true");
  CHECK(r.at("volume.consistent") == "true");
  CHECK(r.has("volume.dehn.lower_bound"));
  CHECK(r.at("packing.status") == "not_applicable");
  CHECK_FALSE(r.has("slopes.1.k"));
}

TEST_CASE("invalid diagram gives the validation section only") {
  const auto d = load_diagram(std::string(FALKIT_TEST_DATA_DIR) + "/unpaired_circle.fal");
  const auto r = make_report(d);
  CHECK_FALSE(r.valid);
  for (const auto& [k, v] : r.entries) CHECK((k == "format" || k.rfind("validation.", 0) == 0));
  CHECK(r.at("validation.violation.0.code") == "circle_passage_count");
}

TEST_CASE("a failing section does not hide the others") {
  const auto r = make_report(load_diagram(std::string(FALKIT_TEST_DATA_DIR) + "/split_regions.fal"));
  CHECK(r.valid);
  REQUIRE(r.failed_sections == std::vector<std::string>{"packing"});
  CHECK(r.at("packing.error").find("nerve construction failed") != std::string::npos);
  CHECK(r.has("volume.lower_bound"));
  CHECK(r.has("cusps.total_rectangles"));
}

TEST_CASE("bad filled-bound parameter is noted, not fatal") {
  ReportOptions opt;
  opt.dehn_m = 3;
  const auto r = make_report(borromean_bare(), opt);
  CHECK(r.has("volume.dehn.note"));
  CHECK(r.at("packing.status") == "not_applicable");
}

TEST_CASE("tree lines and real formatting") {
  const auto r = make_report(load_example("planar_c4.fal"));
  const std::regex line(R"([a-z0-9_.]+ = .*)");
  const auto tree = render_tree(r);
  std::size_t start = 0;
  while (start < tree.size()) {
    const auto end = tree.find('\n', start);
    CHECK(std::regex_match(tree.substr(start, end - start), line));
    start = end + 1;
  }
  CHECK(render_text(r).find("[volume]") != std::string::npos);

  Rng rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
    const auto s = format_real(x);
    CHECK(format_real(std::strtod(s.c_str(), nullptr)) == s);
    CHECK(std::abs(std::strtod(s.c_str(), nullptr) - x) <= 1e-11 * std::abs(x));
  }
  CHECK(format_real(7.327724753417752) == "7.32772475342");
}

TEST_CASE("svg of a crossing circle tiling") {
  const auto d = borromean_bare();
  const auto t = cusp_tiling(d, resolve_components(d), "C1");
  const auto svg = render_svg(t);
  CHECK(count(svg, "<rect class=\"tile") == 2);
  CHECK(svg == render_svg(t));
  CHECK(svg.rfind("<?xml", 0) == 0);

  const auto k = cusp_tiling(d, resolve_components(d), "K");
  CHECK(count(render_svg(k), "<rect class=\"tile") == 8);
}

TEST_CASE("svg of the soddy packing") {
  const auto p = solve_packing(soddy_disc(), 1e-10);
  const auto svg = render_svg(p);
  CHECK(count(svg, "<circle class=\"disk") == 4);
  CHECK(count(svg, "<circle class=\"tangency\"") == 6);
  CHECK(svg == render_svg(solve_packing(soddy_disc(), 1e-10)));
}
