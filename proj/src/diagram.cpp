#include "falkit/diagram.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string_view>
#include <utility>

#include "falkit/embedding.hpp"

namespace falkit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

char slot_char(Slot s) { return s == Slot::A ? 'A' : 'B'; }

// Sorted circle ids with their positions; the first occurrence wins on duplicates.
class CircleIndex {
 public:
  explicit CircleIndex(const std::vector<CrossingCircle>& circles) {
    entries_.reserve(circles.size());
    for (std::size_t i = 0; i < circles.size(); ++i) entries_.emplace_back(circles[i].id, i);
    std::sort(entries_.begin(), entries_.end());
  }
  std::optional<std::size_t> find(std::string_view id) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                               [](const auto& e, std::string_view k) { return e.first < k; });
    if (it == entries_.end() || it->first != id) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::pair<std::string_view, std::size_t>> entries_;
};

}  // namespace

int euler_characteristic(const ManifoldSpec& manifold) {
  return std::visit(overloaded{
                        [](const Ball&) { return 1; },
                        [](const Handlebody& h) { return 1 - h.genus; },
                        [](const ThickenedSurface& t) { return 2 - 2 * t.genus; },
                        [](const CustomManifold& c) { return c.chi; },
                    },
                    manifold);
}

bool chi_user_asserted(const ManifoldSpec& manifold) {
  return std::holds_alternative<CustomManifold>(manifold);
}

std::string describe(const ManifoldSpec& manifold) {
  return std::visit(
      overloaded{
          [](const Ball&) { return std::string("ball"); },
          [](const Handlebody& h) { return "handlebody " + std::to_string(h.genus); },
          [](const ThickenedSurface& t) {
            return "thickened_surface " + std::to_string(t.genus);
          },
          [](const CustomManifold& c) {
            return "custom chi " + std::to_string(c.chi) + " " + c.label;
          },
      },
      manifold);
}

const CrossingCircle* FALDiagram::find_circle(const std::string& id) const {
  auto it = std::find_if(circles.begin(), circles.end(),
                         [&](const CrossingCircle& c) { return c.id == id; });
  return it == circles.end() ? nullptr : &*it;
}

const Strand* FALDiagram::find_strand(const std::string& id) const {
  auto it = std::find_if(strands.begin(), strands.end(),
                         [&](const Strand& s) { return s.id == id; });
  return it == strands.end() ? nullptr : &*it;
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

ValidationError::ValidationError(ValidationReport report)
    : Error(report.violations.empty()
                ? std::string("invalid diagram")
                : "invalid diagram: " + report.violations.front().message),
      report_(std::move(report)) {}

ValidationReport validate(const FALDiagram& d) {
  ValidationReport report;
  auto add = [&](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };

  if (d.surface_genus < 0) add("negative_genus", "surface genus is negative");
  std::visit(overloaded{
                 [&](const Ball&) {
                   if (d.surface_genus != 0)
                     add("genus_mismatch", "a ball has a sphere boundary, surface genus must be 0");
                 },
                 [&](const Handlebody& h) {
                   if (h.genus < 0) add("negative_genus", "handlebody genus is negative");
                   if (h.genus != d.surface_genus)
                     add("genus_mismatch", "handlebody genus " + std::to_string(h.genus) +
                                               " differs from surface genus " +
                                               std::to_string(d.surface_genus));
                 },
                 [&](const ThickenedSurface& t) {
                   if (t.genus < 0) add("negative_genus", "thickened surface genus is negative");
                   if (t.genus != d.surface_genus)
                     add("genus_mismatch", "thickened surface genus " + std::to_string(t.genus) +
                                               " differs from surface genus " +
                                               std::to_string(d.surface_genus));
                 },
                 [](const CustomManifold&) {},
             },
             d.manifold);

  std::vector<std::string_view> ids;
  ids.reserve(d.circles.size() + d.strands.size());
  for (const auto& c : d.circles) ids.push_back(c.id);
  for (const auto& s : d.strands) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  for (auto it = ids.begin(); (it = std::adjacent_find(it, ids.end())) != ids.end();) {
    const auto id = *it;
    it = std::find_if(it, ids.end(), [&](std::string_view x) { return x != id; });
    add("duplicate_id", "identifier " + std::string(id) + " is used twice");
  }

  if (d.strands.empty()) add("no_strands", "diagram has no strands");

  const CircleIndex circle_index(d.circles);

  // node layout: strands first, then circles
  DisjointSets sets(d.strands.size() + d.circles.size());
  std::vector<std::array<int, 2>> fills(d.circles.size(), {0, 0});

  for (std::size_t s = 0; s < d.strands.size(); ++s) {
    const auto& strand = d.strands[s];
    if (strand.passages.empty())
      add("empty_strand", "strand " + strand.id + " has no passages");
    for (const auto& p : strand.passages) {
      if (p.direction != 1 && p.direction != -1)
        add("bad_direction", "strand " + strand.id + " has a passage with direction " +
                                 std::to_string(p.direction));
      const auto c = circle_index.find(p.circle);
      if (!c) {
        add("unknown_circle", "strand " + strand.id + " passes through unknown circle " + p.circle);
        continue;
      }
      ++fills[*c][p.slot == Slot::A ? 0 : 1];
      sets.unite(s, d.strands.size() + *c);
    }
  }

  for (std::size_t c = 0; c < d.circles.size(); ++c) {
    const auto& id = d.circles[c].id;
    for (int k = 0; k < 2; ++k)
      if (fills[c][k] > 1)
        add("duplicate_slot", "slot " + id + "." + slot_char(k == 0 ? Slot::A : Slot::B) +
                                  " is used " + std::to_string(fills[c][k]) + " times");
    const int total = fills[c][0] + fills[c][1];
    if (total != 2)
      add("circle_passage_count",
          "circle " + id + " has " + std::to_string(total) + " of 2 passages");
    else if (fills[c][0] != 1 || fills[c][1] != 1)
      add("slot_missing", "circle " + id + " does not have both slots filled");
  }

  const std::size_t nodes = d.strands.size() + d.circles.size();
  if (nodes > 0) {
    const std::size_t root = sets.find(0);
    for (std::size_t n = 1; n < nodes; ++n) {
      if (sets.find(n) != root) {
        add("disconnected", "diagram not connected");
        break;
      }
    }
  }

  if (d.embedding) {
    for (auto& v : face_data_violations(*d.embedding)) report.violations.push_back(std::move(v));
    for (auto& v : ring_vertex_violations(d, *d.embedding))
      report.violations.push_back(std::move(v));
  }
  return report;
}

void require_valid(const FALDiagram& diagram) {
  auto report = validate(diagram);
  if (!report.ok()) throw ValidationError(std::move(report));
}

std::size_t count_crossing_circles(const FALDiagram& diagram) { return diagram.circles.size(); }

const LinkComponent* ResolvedLink::find(const std::string& id) const {
  auto it = std::find_if(components.begin(), components.end(),
                         [&](const LinkComponent& c) { return c.id == id; });
  return it == components.end() ? nullptr : &*it;
}

std::size_t ResolvedLink::surface_knot_count() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(),
                    [](const LinkComponent& c) { return !c.is_crossing_circle(); }));
}

namespace {

// Arc ends are numbered 2 * arc + end, with end 0 = tail and 1 = head.
constexpr std::size_t kTail = 0;
constexpr std::size_t kHead = 1;

struct ArcTable {
  std::vector<std::size_t> offset;  // first global arc of each strand
  std::vector<std::pair<std::size_t, std::size_t>> owner;  // global arc -> (strand, arc)

  explicit ArcTable(const FALDiagram& d) {
    for (std::size_t s = 0; s < d.strands.size(); ++s) {
      offset.push_back(owner.size());
      for (std::size_t i = 0; i < d.strands[s].passages.size(); ++i) owner.emplace_back(s, i);
    }
  }
  std::size_t arc(std::size_t s, std::size_t i) const { return offset[s] + i; }
};

}  // namespace

ResolvedLink resolve_components(const FALDiagram& d) {
  require_valid(d);
  const ArcTable arcs(d);

  struct Site {
    std::size_t strand, index;
  };
  const CircleIndex circle_index(d.circles);
  std::vector<std::array<Site, 2>> sites(d.circles.size());
  for (std::size_t s = 0; s < d.strands.size(); ++s)
    for (std::size_t i = 0; i < d.strands[s].passages.size(); ++i) {
      const auto& p = d.strands[s].passages[i];
      sites[*circle_index.find(p.circle)][p.slot == Slot::A ? 0 : 1] = {s, i};
    }

  // Ends attached to the negative and positive side of the disc at a passage.
  auto sides = [&](const Site& site) {
    const std::size_t k = d.strands[site.strand].passages.size();
    const std::size_t incoming_head = 2 * arcs.arc(site.strand, (site.index + k - 1) % k) + kHead;
    const std::size_t outgoing_tail = 2 * arcs.arc(site.strand, site.index) + kTail;
    const bool along = d.strands[site.strand].passages[site.index].direction > 0;
    return along ? std::pair{incoming_head, outgoing_tail} : std::pair{outgoing_tail, incoming_head};
  };

  std::vector<std::size_t> partner(2 * arcs.owner.size());
  auto join = [&](std::size_t a, std::size_t b) {
    partner[a] = b;
    partner[b] = a;
  };
  for (std::size_t k = 0; k < d.circles.size(); ++k) {
    const auto& circle = d.circles[k];
    const auto& [a, b] = sites[k];
    const auto [neg_a, pos_a] = sides(a);
    const auto [neg_b, pos_b] = sides(b);
    if (has_half_twist(circle.half_twist)) {
      join(neg_a, pos_b);
      join(neg_b, pos_a);
    } else {
      join(neg_a, pos_a);
      join(neg_b, pos_b);
    }
  }

  ResolvedLink out;
  out.components.reserve(d.circles.size() + arcs.owner.size());
  for (const auto& circle : d.circles) {
    LinkComponent c;
    c.kind = LinkComponent::Kind::CrossingCircle;
    c.id = circle.id;
    c.circle = circle.id;
    out.components.push_back(std::move(c));
  }

  std::vector<bool> seen(arcs.owner.size(), false);
  for (std::size_t start = 0; start < arcs.owner.size(); ++start) {
    if (seen[start]) continue;
    LinkComponent c;
    c.kind = LinkComponent::Kind::SurfaceKnot;
    std::size_t cur = start;
    bool forward = true;
    do {
      seen[cur] = true;
      const auto [s, i] = arcs.owner[cur];
      c.blocks.push_back({s, i, !forward});
      const std::size_t next_end = partner[2 * cur + (forward ? kHead : kTail)];
      cur = next_end / 2;
      forward = next_end % 2 == kTail;
    } while (cur != start);

    const auto first_strand = c.blocks.front().strand;
    const auto on_strand = std::count_if(c.blocks.begin(), c.blocks.end(),
                                         [&](const Block& b) { return b.strand == first_strand; });
    c.id = d.strands[first_strand].id;
    if (static_cast<std::size_t>(on_strand) != d.strands[first_strand].passages.size())
      c.id += "/" + std::to_string(c.blocks.front().arc);
    out.components.push_back(std::move(c));
  }
  return out;
}

const Passage& block_exit_passage(const FALDiagram& d, const Block& b) {
  const auto& ps = d.strands.at(b.strand).passages;
  return b.reversed ? ps.at(b.arc) : ps.at((b.arc + 1) % ps.size());
}

const Passage& block_entry_passage(const FALDiagram& d, const Block& b) {
  const auto& ps = d.strands.at(b.strand).passages;
  return b.reversed ? ps.at((b.arc + 1) % ps.size()) : ps.at(b.arc);
}

}  // namespace falkit
