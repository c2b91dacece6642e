#pragma once

#include <string>
#include <string_view>

#include "falkit/diagram.hpp"

namespace falkit {

/// Reads the `falkit diagram v1` text format. Throws ParseError with the line
/// and column of the first problem. The result is not validated.
FALDiagram parse_diagram(std::string_view text);

/// Canonical text form; parse_diagram(serialize_diagram(d)) == d for valid d.
std::string serialize_diagram(const FALDiagram& diagram);

FALDiagram load_diagram(const std::string& path);

}  // namespace falkit
