#pragma once

#include <string>

#include "falkit/diagram.hpp"
#include "falkit/diagram_io.hpp"

namespace falkit::testing {

inline std::string diagram_path(const std::string& name) { return std::string(FALKIT_DIAGRAM_DIR) + "/" + name; }

inline FALDiagram load_example(const std::string& name) { return load_diagram(diagram_path(name)); }

/// Borromean pattern built by hand: strand K : C1.A+ C2.A+ C1.B+ C2.B+.
inline FALDiagram borromean_bare() {
  FALDiagram d;
  d.circles = {{"C1", HalfTwist::None}, {"C2", HalfTwist::None}};
  d.strands = {{"K",
                {{"C1", Slot::A, 1}, {"C2", Slot::A, 1}, {"C1", Slot::B, 1}, {"C2", Slot::B, 1}}}};
  return d;
}

/// One crossing circle, one strand, on the torus.
inline FALDiagram torus_chain_bare() {
  FALDiagram d;
  d.surface_genus = 1;
  d.manifold = ThickenedSurface{1};
  d.circles = {{"C1", HalfTwist::None}};
  d.strands = {{"K", {{"C1", Slot::A, 1}, {"C1", Slot::B, 1}}}};
  return d;
}

}  // namespace falkit::testing
