#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "falkit/error.hpp"
#include "falkit/face_data.hpp"

namespace falkit {

// ---------------------------------------------------------------------------
// Ambient manifold M. The link lives on a surface of its boundary inside the
// double of M.

struct Ball {
  bool operator==(const Ball&) const = default;
};
struct Handlebody {
  int genus = 0;
  bool operator==(const Handlebody&) const = default;
};
/// M = S_g x [-1, 0], doubled along S_g x {0}.
struct ThickenedSurface {
  int genus = 0;
  bool operator==(const ThickenedSurface&) const = default;
};
/// Any compact orientable M; its Euler characteristic is taken on trust.
struct CustomManifold {
  int chi = 0;
  std::string label;
  bool operator==(const CustomManifold&) const = default;
};

using ManifoldSpec = std::variant<Ball, Handlebody, ThickenedSurface, CustomManifold>;

int euler_characteristic(const ManifoldSpec& manifold);

/// True when chi comes from the user rather than from the manifold type.
bool chi_user_asserted(const ManifoldSpec& manifold);

std::string describe(const ManifoldSpec& manifold);

// ---------------------------------------------------------------------------

enum class HalfTwist { None, Positive, Negative };
enum class Slot { A, B };

inline bool has_half_twist(HalfTwist t) { return t != HalfTwist::None; }

/// +1 / -1 for a twisted circle, 0 otherwise.
inline int twist_sign(HalfTwist t) {
  return t == HalfTwist::Positive ? 1 : (t == HalfTwist::Negative ? -1 : 0);
}

struct CrossingCircle {
  std::string id;
  HalfTwist half_twist = HalfTwist::None;

  bool operator==(const CrossingCircle&) const = default;
};

/// A strand crossing a crossing disc. `direction` is +1 when the strand runs
/// along the disc co-orientation, -1 otherwise.
struct Passage {
  std::string circle;
  Slot slot = Slot::A;
  int direction = 1;

  bool operator==(const Passage&) const = default;
};

/// A closed curve on the surface, given by the cyclic order of its passages.
struct Strand {
  std::string id;
  std::vector<Passage> passages;

  bool operator==(const Strand&) const = default;
};

struct FALDiagram {
  int surface_genus = 0;
  ManifoldSpec manifold = Ball{};
  std::vector<Strand> strands;
  std::vector<CrossingCircle> circles;
  std::optional<FaceData> embedding;

  const CrossingCircle* find_circle(const std::string& id) const;
  const Strand* find_strand(const std::string& id) const;

  bool operator==(const FALDiagram&) const = default;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Checks every structural condition of a diagram. Never throws.
ValidationReport validate(const FALDiagram& diagram);

/// Throws ValidationError when `validate` reports anything.
void require_valid(const FALDiagram& diagram);

std::size_t count_crossing_circles(const FALDiagram& diagram);

// ---------------------------------------------------------------------------
// Component resolution under half twists

/// A strand arc from passage `arc` to passage `arc + 1` (cyclically),
/// walked backwards when `reversed` is set.
struct Block {
  std::size_t strand = 0;  // index into FALDiagram::strands
  std::size_t arc = 0;
  bool reversed = false;

  bool operator==(const Block&) const = default;
};

struct LinkComponent {
  enum class Kind { CrossingCircle, SurfaceKnot };

  Kind kind = Kind::SurfaceKnot;
  std::string id;
  std::string circle;         // CrossingCircle only
  std::vector<Block> blocks;  // SurfaceKnot only, in traversal order

  /// Number of crossing discs met, counted with multiplicity.
  std::size_t passage_count() const { return blocks.size(); }
  bool is_crossing_circle() const { return kind == Kind::CrossingCircle; }
};

struct ResolvedLink {
  std::vector<LinkComponent> components;

  const LinkComponent* find(const std::string& id) const;
  std::size_t surface_knot_count() const;
};

/// Traces strand arcs through every crossing disc, re-pairing the two disc
/// points at half-twisted circles. Crossing circles come first, in diagram
/// order; surface knots follow, each starting at its lowest (strand, arc).
ResolvedLink resolve_components(const FALDiagram& diagram);

/// Passage met at the head of `block` when walked in its traversal direction.
const Passage& block_exit_passage(const FALDiagram& diagram, const Block& block);
/// Passage at the tail of `block` in traversal direction.
const Passage& block_entry_passage(const FALDiagram& diagram, const Block& block);

}  // namespace falkit
