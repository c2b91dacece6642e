#pragma once

#include <string>
#include <vector>

namespace falkit {

struct Edge {
  std::string id;
  std::string from;
  std::string to;

  bool operator==(const Edge&) const = default;
};

/// One side of an edge. `forward` walks the edge from `from` to `to`
/// (written `e^` in diagram files), otherwise from `to` to `from` (`e_`).
struct Dart {
  std::string edge;
  bool forward = true;

  bool operator==(const Dart&) const = default;
};

using FaceWalk = std::vector<Dart>;

/// Cellular embedding of a graph given by explicit face boundary walks.
/// Faces keep their interior on the left of each dart.
struct FaceData {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<FaceWalk> faces;

  bool operator==(const FaceData&) const = default;
};

}  // namespace falkit
