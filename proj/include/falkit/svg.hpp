#pragma once

#include <string>

#include "falkit/cusp.hpp"
#include "falkit/packing.hpp"

namespace falkit {

/// Rectangle strip of a cusp tiling, all white sides at length 1. One
/// `<rect class="tile">` per rectangle; black and white sides as coloured lines.
std::string render_svg(const CuspTiling& tiling);

/// One `<circle class="disk">` per packed circle and one
/// `<circle class="tangency">` per tangent pair.
std::string render_svg(const Packing& packing);

}  // namespace falkit
