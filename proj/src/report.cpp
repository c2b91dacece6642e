#include "falkit/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "falkit/cusp.hpp"
#include "falkit/embedding.hpp"
#include "falkit/nerve.hpp"
#include "falkit/packing.hpp"
#include "falkit/volume.hpp"

namespace falkit {

namespace {

class Builder {
 public:
  explicit Builder(Report& r) : r_(r) {}

  void put(const std::string& key, const std::string& value) { r_.entries.emplace_back(key, value); }
  void put(const std::string& key, const char* value) { put(key, std::string(value)); }
  void put(const std::string& key, bool value) { put(key, value ? "true" : "false"); }
  void put(const std::string& key, double value) { put(key, format_real(value)); }
  template <typename I>
    requires std::is_integral_v<I>
  void put(const std::string& key, I value) {
    put(key, std::to_string(value));
  }

  // Runs one section; an exception becomes `<name>.error`.
  template <typename F>
  void section(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      put(name + ".error", std::string(e.what()));
      r_.failed_sections.push_back(name);
    }
  }

 private:
  Report& r_;
};

std::string manifold_key(const ManifoldSpec& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using M = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<M, Ball>) return "ball";
        else if constexpr (std::is_same_v<M, Handlebody>) return "handlebody";
        else if constexpr (std::is_same_v<M, ThickenedSurface>) return "thickened_surface";
        else return "custom";
      },
      m);
}

}  // namespace

bool Report::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const std::string& Report::at(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw DomainError("report has no key " + key);
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Report make_report(const FALDiagram& d, const ReportOptions& options) {
  Report report;
  Builder b(report);
  b.put("format", "falkit-report-v1");

  const auto validation = validate(d);
  report.valid = validation.ok();
  b.put("validation.ok", report.valid);
  b.put("validation.violations", validation.violations.size());
  for (std::size_t i = 0; i < validation.violations.size(); ++i) {
    const auto p = "validation.violation." + std::to_string(i);
    b.put(p + ".code", validation.violations[i].code);
    b.put(p + ".message", validation.violations[i].message);
  }
  if (!report.valid) return report;

  b.section("diagram", [&] {
    b.put("diagram.surface_genus", d.surface_genus);
    b.put("diagram.manifold", manifold_key(d.manifold));
    b.put("diagram.manifold_description", describe(d.manifold));
    b.put("diagram.chi", euler_characteristic(d.manifold));
    b.put("diagram.chi_user_asserted", chi_user_asserted(d.manifold));
    b.put("diagram.crossing_circles", count_crossing_circles(d));
    b.put("diagram.strands", d.strands.size());
    b.put("diagram.has_embedding", d.embedding.has_value());
    if (d.embedding) {
      b.section("diagram.cellular", [&] { b.put("diagram.cellular", is_cellular(d)); });
    }
  });

  std::optional<ResolvedLink> resolved;
  b.section("components", [&] {
    resolved = resolve_components(d);
    b.put("components.count", resolved->components.size());
    b.put("components.surface_knots", resolved->surface_knot_count());
    for (std::size_t i = 0; i < resolved->components.size(); ++i) {
      const auto& c = resolved->components[i];
      const auto p = "components." + std::to_string(i);
      b.put(p + ".id", c.id);
      b.put(p + ".kind", c.is_crossing_circle() ? "crossing_circle" : "surface_knot");
      if (!c.is_crossing_circle()) b.put(p + ".n", c.passage_count());
    }
  });

  if (resolved) {
    b.section("cusps", [&] {
      const auto tilings = cusp_tilings(d, *resolved);
      std::size_t total = 0;
      b.put("cusps.count", tilings.size());
      for (std::size_t i = 0; i < tilings.size(); ++i) {
        const auto& t = tilings[i];
        const auto p = "cusps." + std::to_string(i);
        total += t.rectangles.size();
        b.put(p + ".component", t.component);
        b.put(p + ".rectangles", t.rectangles.size());
        b.put(p + ".meridian", to_string(t.meridian));
        b.put(p + ".longitude", to_string(t.longitude));
        const auto tr = normalized_translations(t);
        b.put(p + ".meridian_at_w1", format_real(tr.meridian.x()) + " " + format_real(tr.meridian.y()));
        b.put(p + ".longitude_at_w1", format_real(tr.longitude.x()) + " " + format_real(tr.longitude.y()));
        b.put(p + ".area_lower_bound", cusp_area_lower_bound(t));
      }
      b.put("cusps.total_rectangles", total);
    });
  }

  b.section("volume", [&] {
    const auto v = volume_report(d, options.dehn_m);
    b.put("volume.lower_bound", v.lower_bound);
    if (v.upper_bound) b.put("volume.upper_bound", *v.upper_bound);
    else b.put("volume.upper_bound_note", v.upper_bound_note);
    if (options.dehn_m) {
      b.put("volume.dehn.m", *options.dehn_m);
      if (v.dehn_filled_lower) b.put("volume.dehn.lower_bound", *v.dehn_filled_lower);
      else b.put("volume.dehn.note", v.dehn_filled_note);
    }
    b.put("volume.hyperbolic_assumed", v.hyperbolic_assumed);
    b.put("volume.cellular_verified", v.cellular_verified);
    b.put("volume.chi_unverified", v.chi_unverified);
    b.put("volume.consistent", v.consistent());
  });

  b.section("slopes", [&] {
    b.put("slopes.count", options.slopes);
    for (int n = 1; n <= options.slopes; ++n) {
      const auto s = slope_bound_for_crossings(n);
      const auto p = "slopes." + std::to_string(n);
      b.put(p + ".k", s.k);
      b.put(p + ".half_twist", s.needs_half_twist);
      b.put(p + ".length_lower_bound", s.length_lower_bound);
    }
  });

  if (options.packing) {
    b.section("packing", [&] {
      if (d.surface_genus != 0 || !d.embedding) {
        b.put("packing.status", "not_applicable");
        b.put("packing.reason", d.surface_genus != 0 ? "surface genus is not 0" : "no face data");
        return;
      }
      const auto nerve = nerve_from_diagram(d);
      const auto pk = solve_packing(nerve, options.packing_tolerance);
      b.put("packing.status", "ok");
      b.put("packing.vertices", nerve.vertices.size());
      b.put("packing.edges", nerve_edges(nerve).size());
      b.put("packing.triangles", nerve.triangles.size());
      b.put("packing.sweeps", pk.sweeps);
      b.put("packing.max_angle_residual", pk.max_angle_residual);
      b.put("packing.max_tangency_residual", pk.max_tangency_residual);
    });
  }
  return report;
}

std::string render_tree(const Report& report) {
  std::string out;
  for (const auto& [k, v] : report.entries) out += k + " = " + v + "\n";
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  std::string current;
  for (const auto& [k, v] : report.entries) {
    const auto dot = k.find('.');
    const std::string section = dot == std::string::npos ? "" : k.substr(0, dot);
    if (section != current) {
      current = section;
      out << "\n[" << section << "]\n";
    }
    out << "  " << (dot == std::string::npos ? k : k.substr(dot + 1)) << ": " << v << "\n";
  }
  std::string s = out.str();
  return s.empty() || s[0] != '\n' ? s : s.substr(1);
}

}  // namespace falkit
