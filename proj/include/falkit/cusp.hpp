#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "falkit/diagram.hpp"
#include "falkit/error.hpp"

namespace falkit {

// Cusp tori are drawn with black sides vertical and of unit length, white
// sides horizontal. A column is one rectangle wide and two rectangles tall
// (the two rectangles are swapped by the reflection).

enum class SideKind { Black, White, Diagonal };

/// One step of a closed word on the rectangle complex. `white` is the 1-based
/// white parameter index of the column crossed; `shear` is the signed black
/// shift (Diagonal only).
struct Letter {
  SideKind kind = SideKind::Black;
  int white = 0;
  int shear = 0;

  static Letter black() { return {SideKind::Black, 0, 0}; }
  static Letter white_side(int i) { return {SideKind::White, i, 0}; }
  static Letter diagonal(int i, int shear) { return {SideKind::Diagonal, i, shear}; }

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

std::string to_string(const Letter& letter);
std::string to_string(const Word& word);

enum class Layer { Upper, Lower };

struct Rectangle {
  std::string id;
  std::size_t column = 0;
  Layer layer = Layer::Upper;
  std::array<std::string, 2> black_sides;  // left, right
  std::array<std::string, 2> white_sides;  // bottom, top
  int white_param = 1;
  int offset = 0;  // height of the bottom edge, in black units
};

struct CuspTiling {
  std::string component;
  bool crossing_circle = false;
  std::vector<Rectangle> rectangles;
  /// Black shift applied when leaving column i to the right.
  std::vector<int> column_shear;
  Word meridian;
  Word longitude;
  /// For surface knots: which strand arcs the cusp runs through backwards.
  std::vector<bool> reversed_blocks;

  std::size_t columns() const { return column_shear.size(); }
};

/// Rectangle complex of one cusp torus.
/// Throws DomainError for an unknown component id.
CuspTiling cusp_tiling(const FALDiagram& diagram, const ResolvedLink& resolved,
                       const std::string& component_id);

/// Tilings of every component of the resolved link, in component order.
std::vector<CuspTiling> cusp_tilings(const FALDiagram& diagram, const ResolvedLink& resolved);

/// Walks `word` from the bottom-left corner of column 0 and reports whether
/// it returns to its starting vertex on the torus.
bool closes(const CuspTiling& tiling, const Word& word);

/// White side lengths keyed by 1-based white parameter index.
using WhiteLengths = std::map<int, double>;

template <typename Scalar>
struct CuspTranslations {
  Eigen::Matrix<Scalar, 2, 1> meridian;
  Eigen::Matrix<Scalar, 2, 1> longitude;

  /// Area of the cusp torus in the normalisation (|det|).
  Scalar area() const {
    using std::abs;
    return abs(meridian.x() * longitude.y() - meridian.y() * longitude.x());
  }
};

/// Translation vector of a word: Black = (0, 1), White(i) = (w_i, 0),
/// Diagonal(i, s) = (w_i, s).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> word_translation(const Word& word,
                                             const std::map<int, Scalar>& white_lengths) {
  Eigen::Matrix<Scalar, 2, 1> t = Eigen::Matrix<Scalar, 2, 1>::Zero();
  for (const Letter& l : word) {
    if (l.kind == SideKind::Black) {
      t.y() += Scalar(1);
      continue;
    }
    auto it = white_lengths.find(l.white);
    if (it == white_lengths.end())
      throw DomainError("no length given for white parameter w" + std::to_string(l.white));
    if (!(it->second >= Scalar(1)))
      throw DomainError("w" + std::to_string(l.white) + " violates white-side lower bound 1");
    t.x() += it->second;
    t.y() += Scalar(l.shear);
  }
  return t;
}

template <typename Scalar>
CuspTranslations<Scalar> normalized_translations(const CuspTiling& tiling,
                                                 const std::map<int, Scalar>& white_lengths) {
  return {word_translation(tiling.meridian, white_lengths),
          word_translation(tiling.longitude, white_lengths)};
}

/// Translations with every white side at its extremal length 1.
CuspTranslations<double> normalized_translations(const CuspTiling& tiling);

/// White lengths map with all parameters of the tiling set to `w`.
WhiteLengths uniform_white_lengths(const CuspTiling& tiling, double w = 1.0);

/// Length of the slope p * meridian + q * longitude.
template <typename Scalar>
Scalar slope_length(const CuspTranslations<Scalar>& t, long p, long q) {
  return (Scalar(p) * t.meridian + Scalar(q) * t.longitude).norm();
}

struct SlopeBound {
  int crossings = 0;  // n
  int k = 0;          // filling slope 1/k on the crossing circle
  bool needs_half_twist = false;
  double length_lower_bound = 0.0;
};

/// Normalised length bound of the crossing-circle slope that inserts n
/// crossings: n = 2k gives sqrt(1 + 4k^2), n = 2k + 1 gives sqrt(1 + (2k+1)^2).
SlopeBound slope_bound_for_crossings(int n);

/// Each rectangle has area at least one.
double cusp_area_lower_bound(const CuspTiling& tiling);

}  // namespace falkit
