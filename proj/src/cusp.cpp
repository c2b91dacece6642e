#include "falkit/cusp.hpp"

#include <cmath>

namespace falkit {

std::string to_string(const Letter& letter) {
  switch (letter.kind) {
    case SideKind::Black:
      return "B";
    case SideKind::White:
      return "W" + std::to_string(letter.white);
    case SideKind::Diagonal:
      return "D" + std::to_string(letter.white) + (letter.shear > 0 ? "+" : "-");
  }
  return "?";
}

std::string to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += to_string(word[i]);
  }
  return out;
}

namespace {

std::string disc_token(const Passage& p) {
  return p.circle + (p.slot == Slot::A ? ".A" : ".B");
}

Letter column_letter(int white, int shear) {
  return shear == 0 ? Letter::white_side(white) : Letter::diagonal(white, shear);
}

void add_column(CuspTiling& t, std::size_t column, int offset, std::array<std::string, 2> black,
                const std::string& white_low, const std::string& white_high) {
  const int w = static_cast<int>(column) + 1;
  t.rectangles.push_back({t.component + ".r" + std::to_string(2 * column), column, Layer::Upper,
                          black, {white_low, white_high}, w, offset});
  t.rectangles.push_back({t.component + ".r" + std::to_string(2 * column + 1), column,
                          Layer::Lower, black, {white_high, white_low}, w, offset + 1});
}

}  // namespace

CuspTiling cusp_tiling(const FALDiagram& d, const ResolvedLink& resolved,
                       const std::string& component_id) {
  const LinkComponent* comp = resolved.find(component_id);
  if (!comp) throw DomainError("unknown component " + component_id);

  CuspTiling t;
  t.component = comp->id;
  if (comp->is_crossing_circle()) {
    const CrossingCircle* circle = d.find_circle(comp->circle);
    if (!circle) throw DomainError("unknown crossing circle " + comp->circle);
    const int shear = twist_sign(circle->half_twist);
    t.crossing_circle = true;
    t.column_shear = {shear};
    add_column(t, 0, 0, {circle->id + ".D-", circle->id + ".D+"}, circle->id + ".wA",
               circle->id + ".wB");
    t.meridian = {column_letter(1, shear)};
    t.longitude = {Letter::black(), Letter::black()};
    return t;
  }

  int offset = 0;
  for (std::size_t i = 0; i < comp->blocks.size(); ++i) {
    const Block& b = comp->blocks[i];
    const Passage& entry = block_entry_passage(d, b);
    const Passage& exit = block_exit_passage(d, b);
    const CrossingCircle* circle = d.find_circle(exit.circle);
    if (!circle) throw DomainError("unknown crossing circle " + exit.circle);
    const int shear = twist_sign(circle->half_twist);
    add_column(t, i, offset, {disc_token(entry), disc_token(exit)}, t.component + ".w0",
               t.component + ".w1");
    t.column_shear.push_back(shear);
    t.longitude.push_back(column_letter(static_cast<int>(i) + 1, shear));
    t.reversed_blocks.push_back(b.reversed);
    offset += shear;
  }
  t.meridian = {Letter::black(), Letter::black()};
  return t;
}

std::vector<CuspTiling> cusp_tilings(const FALDiagram& d, const ResolvedLink& resolved) {
  std::vector<CuspTiling> out;
  out.reserve(resolved.components.size());
  for (const auto& c : resolved.components) out.push_back(cusp_tiling(d, resolved, c.id));
  return out;
}

bool closes(const CuspTiling& t, const Word& word) {
  const std::size_t n = t.columns();
  if (n == 0) return false;
  // Height is tracked relative to the bottom of the current column, so a
  // shear between columns leaves it unchanged.
  std::size_t column = 0;
  std::size_t crossed = 0;
  int height = 0;
  for (const Letter& l : word) {
    if (l.kind == SideKind::Black) {
      ++height;
      continue;
    }
    if (l.white != static_cast<int>(column) + 1) return false;
    if (l.shear != t.column_shear[column]) return false;
    if ((l.kind == SideKind::Diagonal) != (l.shear != 0)) return false;
    column = (column + 1) % n;
    ++crossed;
  }
  return column == 0 && crossed % n == 0 && height % 2 == 0 && !word.empty();
}

CuspTranslations<double> normalized_translations(const CuspTiling& tiling) {
  return normalized_translations<double>(tiling, uniform_white_lengths(tiling));
}

WhiteLengths uniform_white_lengths(const CuspTiling& tiling, double w) {
  WhiteLengths out;
  for (std::size_t i = 0; i < tiling.columns(); ++i) out[static_cast<int>(i) + 1] = w;
  return out;
}

SlopeBound slope_bound_for_crossings(int n) {
  if (n < 1) throw DomainError("slope bound needs at least one inserted crossing");
  SlopeBound b;
  b.crossings = n;
  b.k = n / 2;
  b.needs_half_twist = n % 2 == 1;
  const double sheared = b.needs_half_twist ? 2.0 * b.k + 1.0 : 2.0 * b.k;
  b.length_lower_bound = std::sqrt(1.0 + sheared * sheared);
  return b;
}

double cusp_area_lower_bound(const CuspTiling& tiling) {
  return static_cast<double>(tiling.rectangles.size());
}

}  // namespace falkit
