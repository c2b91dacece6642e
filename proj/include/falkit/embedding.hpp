#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "falkit/diagram.hpp"
#include "falkit/face_data.hpp"

namespace falkit {

/// Structural problems of face data on its own: unknown references,
/// duplicate tokens, walks that do not chain, edge sides not used exactly once.
std::vector<Violation> face_data_violations(const FaceData& faces);

/// Ring-layout problems of face data attached to a diagram: each crossing
/// circle contributes the four vertices `C.A.in`, `C.A.out`, `C.B.in`,
/// `C.B.out`, each of valence four.
std::vector<Violation> ring_vertex_violations(const FALDiagram& diagram, const FaceData& faces);

/// Genus g of the closed surface with 2 - 2g = V - E + F.
/// Throws StructuralError on malformed face data or an odd / too large V - E + F.
int genus_of_embedding(const FaceData& faces);

/// Whether all complementary regions of the diagram on its surface are discs.
/// Half twists are ignored. Throws Error when the diagram has no face data.
bool is_cellular(const FALDiagram& diagram);

/// Vertex token of a disc crossing, e.g. `C1.A.in`.
std::string ring_vertex(const std::string& circle, Slot slot, bool in);

/// Builds ring-layout face data from the diagram combinatorics alone. Every
/// crossing circle is drawn as a small ring with slot A on the left, slot B on
/// the right and the disc co-orientation pointing up; `mirrored[j]` reflects
/// ring j. Edge tokens: `C.A.s` (strand inside the ring), `C.A.r` (ring arc
/// beside slot A), `C.neg` / `C.pos` (ring arcs on either side of the disc),
/// `<strand>.<i>` (strand from passage i to passage i + 1).
FaceData ring_embedding(const FALDiagram& diagram, const std::vector<bool>& mirrored);

/// Faces surrounding one crossing circle in a ring-layout embedding.
struct RingCells {
  std::string circle;
  std::array<std::size_t, 2> cap_face{};     // bigons beside slots A and B
  std::size_t middle_face = 0;               // between the two strands, collapses to the crossing arc
  std::array<std::size_t, 2> beyond_cap{};   // outer faces across the ring arcs beside A and B
  std::size_t beyond_neg = 0;                // outer face on the negative side of the disc
  std::size_t beyond_pos = 0;                // outer face on the positive side of the disc
};

/// Identifies the role of every edge of the diagram's face data (strand or
/// ring arc, parallel edges resolved by transversality at each crossing) and
/// returns the faces around each crossing circle, in diagram circle order.
/// Throws StructuralError when the face data is not a ring layout of the diagram.
std::vector<RingCells> ring_cells(const FALDiagram& diagram);

}  // namespace falkit
