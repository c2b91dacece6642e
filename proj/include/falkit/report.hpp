#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "falkit/diagram.hpp"

namespace falkit {

struct ReportOptions {
  std::optional<int> dehn_m;
  int slopes = 10;
  bool packing = true;
  double packing_tolerance = 1e-10;
};

/// Flat key/value tree with dotted keys, in emission order. Key list in README.
struct Report {
  std::vector<std::pair<std::string, std::string>> entries;
  bool valid = false;
  std::vector<std::string> failed_sections;

  bool has(const std::string& key) const;
  /// Throws DomainError for a missing key.
  const std::string& at(const std::string& key) const;
};

/// Reals with 12 significant digits; reading the text back and printing it
/// again gives the same text.
std::string format_real(double value);

/// Runs every analysis that applies. A failing section records
/// `<section>.error` and the rest still run. An invalid diagram yields the
/// validation section only.
Report make_report(const FALDiagram& diagram, const ReportOptions& options = {});

/// `key = value` lines.
std::string render_tree(const Report& report);

/// Same content grouped by section for reading.
std::string render_text(const Report& report);

}  // namespace falkit
