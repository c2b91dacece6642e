#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "falkit/diagram.hpp"
#include "falkit/nerve.hpp"

namespace falkit::testing {

using Rng = std::mt19937_64;

/// Random valid diagram without face data: 1..max_circles circles spread over
/// 1..max_strands strands, random directions, twists when `twists` is set.
FALDiagram random_diagram(Rng& rng, int max_circles, int max_strands, bool twists);

/// Every valid diagram whose passages form at most `max_strands` cycles, over
/// 1..max_circles circles, all directions and all half twist flags.
void for_each_small_diagram(int max_circles, int max_strands,
                            const std::function<void(const FALDiagram&)>& visit);

/// Triangulated disc: `boundary` boundary vertices, `interior` interior ones,
/// with random flips to spread degrees. Vertex tokens are `v<k>`.
Nerve random_disc(Rng& rng, std::size_t boundary, std::size_t interior);

/// Soddy configuration: three mutually tangent boundary circles around one.
Nerve soddy_disc();

/// Same diagram, ids and passage tokens unchanged, different strand starts.
FALDiagram rotate_strands(const FALDiagram& d, std::size_t shift);

// ---------------------------------------------------------------------------
// Lane oracle: union-find over strand arcs, written independently of the
// library's tracer.

using ArcSet = std::vector<std::pair<std::size_t, std::size_t>>;

struct LaneResult {
  /// Each surface knot as the sorted list of (strand, arc) it contains; the
  /// knots themselves sorted.
  std::vector<ArcSet> knots;
};

LaneResult lane_components(const FALDiagram& d);

/// Change in the number of surface knots predicted when a half twist is added
/// at untwisted circle `circle`: +1 parallel, 0 antiparallel, -1 distinct.
int predicted_twist_change(const FALDiagram& d, const std::string& circle);

/// predicted_twist_change for every circle, in diagram order (0 for circles
/// that already carry a twist).
std::vector<int> predicted_twist_changes(const FALDiagram& d);

/// Surface knots of a resolution in the LaneResult layout.
std::vector<ArcSet> knot_arcs(const ResolvedLink& r);

/// Integral of -log|2 sin t| from 0 to theta (0 < theta < pi) by composite
/// Gauss-Legendre on the smooth remainder.
double lobachevsky_quadrature(double theta);

}  // namespace falkit::testing
