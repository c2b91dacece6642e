#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "falkit/diagram.hpp"

namespace falkit {

/// Tangency complex of a circle pattern: one vertex per circle, one triangle
/// per interstice. Triangles are kept consistently oriented.
struct Nerve {
  enum class Type { Sphere, Disc };

  std::vector<std::string> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  /// Disc nerves only; when empty it is derived from the boundary edges.
  std::vector<std::size_t> boundary;

  std::size_t index_of(const std::string& vertex) const;
};

std::vector<std::array<std::size_t, 2>> nerve_edges(const Nerve& nerve);
long nerve_euler_characteristic(const Nerve& nerve);

/// Checks the nerve is a simplicial sphere or disc. Empty iff valid.
std::vector<std::string> nerve_violations(const Nerve& nerve);

/// Sphere or Disc; throws StructuralError if the nerve is neither.
Nerve::Type nerve_type(const Nerve& nerve);

/// Reorients triangles so every interior edge is used once in each direction.
/// Throws StructuralError when the complex is not orientable.
Nerve oriented(Nerve nerve);

/// Vertices lying on edges used by a single triangle, sorted.
std::vector<std::size_t> boundary_vertices(const Nerve& nerve);

/// Tangency nerve of the white regions of a cellular diagram on the sphere.
/// Each crossing circle contributes two triangles, one per half of its
/// crossing disc; each spans the regions on both sides of the crossing arc and
/// the region beyond the passage at that end of the arc.
Nerve nerve_from_diagram(const FALDiagram& diagram);

}  // namespace falkit
