#include "falkit/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

namespace falkit {

namespace {

/// Darts of face data: dart 2e walks edge e forwards, 2e + 1 backwards.
struct DartGraph {
  std::map<std::string, std::size_t> vertex_index;
  std::map<std::string, std::size_t> edge_index;
  std::vector<std::size_t> origin;   // per dart
  std::vector<std::size_t> face_of;  // per dart
  std::vector<std::size_t> sigma;    // counter-clockwise successor around the origin
  std::vector<std::vector<std::size_t>> faces;

  static std::size_t rev(std::size_t d) { return d ^ 1U; }
  std::size_t head(std::size_t d) const { return origin[rev(d)]; }
};

std::size_t dart_of(const DartGraph& g, const Dart& dart) {
  return 2 * g.edge_index.at(dart.edge) + (dart.forward ? 0 : 1);
}

/// Builds the dart graph and reports anything that stops the faces from
/// forming a closed orientable surface. The graph is only usable when the
/// returned list is empty.
std::vector<Violation> build(const FaceData& fd, DartGraph& g) {
  std::vector<Violation> out;
  auto add = [&](std::string code, std::string message) {
    out.push_back({std::move(code), std::move(message)});
  };

  for (const auto& v : fd.vertices)
    if (!g.vertex_index.emplace(v, g.vertex_index.size()).second)
      add("duplicate_vertex", "vertex " + v + " is declared twice");
  for (const auto& e : fd.edges) {
    if (!g.edge_index.emplace(e.id, g.edge_index.size()).second) {
      add("duplicate_edge", "edge " + e.id + " is declared twice");
      continue;
    }
    for (const auto* end : {&e.from, &e.to})
      if (!g.vertex_index.count(*end))
        add("unknown_vertex", "edge " + e.id + " ends at undeclared vertex " + *end);
  }
  if (!out.empty()) return out;

  const std::size_t darts = 2 * fd.edges.size();
  g.origin.resize(darts);
  for (std::size_t e = 0; e < fd.edges.size(); ++e) {
    g.origin[2 * e] = g.vertex_index.at(fd.edges[e].from);
    g.origin[2 * e + 1] = g.vertex_index.at(fd.edges[e].to);
  }

  std::vector<int> uses(darts, 0);
  g.face_of.assign(darts, 0);
  for (std::size_t f = 0; f < fd.faces.size(); ++f) {
    const auto& walk = fd.faces[f];
    if (walk.empty()) {
      add("empty_face", "face " + std::to_string(f + 1) + " is empty");
      continue;
    }
    std::vector<std::size_t> ds;
    for (const auto& dart : walk) {
      if (!g.edge_index.count(dart.edge)) {
        add("unknown_edge", "face " + std::to_string(f + 1) + " uses undeclared edge " + dart.edge);
        continue;
      }
      const std::size_t d = dart_of(g, dart);
      ++uses[d];
      g.face_of[d] = f;
      ds.push_back(d);
    }
    g.faces.push_back(std::move(ds));
  }
  if (!out.empty()) return out;

  for (std::size_t d = 0; d < darts; ++d)
    if (uses[d] != 1)
      add("edge_side_count", "edge " + fd.edges[d / 2].id + " side " + (d % 2 == 0 ? "^" : "_") +
                                 " is used " + std::to_string(uses[d]) + " times");
  if (!out.empty()) return out;

  g.sigma.assign(darts, darts);
  for (std::size_t f = 0; f < g.faces.size(); ++f) {
    const auto& ds = g.faces[f];
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const std::size_t cur = ds[i];
      const std::size_t next = ds[(i + 1) % ds.size()];
      if (g.head(cur) != g.origin[next]) {
        add("broken_walk", "face " + std::to_string(f + 1) + " does not chain after edge " +
                               fd.edges[cur / 2].id);
        continue;
      }
      g.sigma[next] = DartGraph::rev(cur);
    }
  }
  if (!out.empty()) return out;

  // The rotation at each vertex must be a single cycle, otherwise the faces
  // pinch the surface at that vertex.
  std::vector<std::size_t> degree(fd.vertices.size(), 0);
  for (std::size_t d = 0; d < darts; ++d) ++degree[g.origin[d]];
  std::vector<bool> seen(darts, false);
  std::vector<bool> vertex_done(fd.vertices.size(), false);
  for (std::size_t d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    std::size_t length = 0;
    for (std::size_t x = d; !seen[x]; x = g.sigma[x]) {
      seen[x] = true;
      ++length;
    }
    const std::size_t v = g.origin[d];
    if (length != degree[v] || vertex_done[v])
      add("pinched_vertex", "faces around vertex " + fd.vertices[v] + " do not form one disc");
    vertex_done[v] = true;
  }
  for (std::size_t v = 0; v < fd.vertices.size(); ++v)
    if (degree[v] == 0) add("isolated_vertex", "vertex " + fd.vertices[v] + " has no edges");
  if (!out.empty()) return out;

  std::vector<std::size_t> parent(fd.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t e = 0; e < fd.edges.size(); ++e)
    parent[root(g.origin[2 * e])] = root(g.origin[2 * e + 1]);
  for (std::size_t v = 1; v < fd.vertices.size(); ++v)
    if (root(v) != root(0)) {
      add("disconnected_graph", "the embedded graph is not connected");
      break;
    }
  return out;
}

DartGraph checked_graph(const FaceData& fd) {
  DartGraph g;
  auto problems = build(fd, g);
  if (!problems.empty()) throw StructuralError("malformed face data: " + problems.front().message);
  return g;
}

const char* slot_name(Slot s) { return s == Slot::A ? "A" : "B"; }

struct PassageRef {
  std::size_t strand;
  std::size_t index;
};

std::map<std::string, std::array<PassageRef, 2>> passage_sites(const FALDiagram& d) {
  std::map<std::string, std::array<PassageRef, 2>> sites;
  for (std::size_t s = 0; s < d.strands.size(); ++s)
    for (std::size_t i = 0; i < d.strands[s].passages.size(); ++i) {
      const auto& p = d.strands[s].passages[i];
      sites[p.circle][p.slot == Slot::A ? 0 : 1] = {s, i};
    }
  return sites;
}

enum class RoleKind { Inner, Cap, Neg, Pos, Outer };

struct Role {
  RoleKind kind;
  std::size_t circle = 0;
  int slot = 0;
  std::string from, to;

  bool strand() const { return kind == RoleKind::Inner || kind == RoleKind::Outer; }
};

/// All edges a ring layout of `d` must contain, endpoints oriented as in
/// ring_embedding.
std::vector<Role> ring_roles(const FALDiagram& d) {
  const auto sites = passage_sites(d);
  std::vector<Role> roles;
  auto vertex_of = [&](const Passage& p, bool in) { return ring_vertex(p.circle, p.slot, in); };

  for (std::size_t c = 0; c < d.circles.size(); ++c) {
    const auto& id = d.circles[c].id;
    const auto& refs = sites.at(id);
    std::array<const Passage*, 2> ps{};
    for (int k = 0; k < 2; ++k) ps[k] = &d.strands[refs[k].strand].passages[refs[k].index];
    for (int k = 0; k < 2; ++k) {
      roles.push_back({RoleKind::Inner, c, k, vertex_of(*ps[k], true), vertex_of(*ps[k], false)});
      roles.push_back({RoleKind::Cap, c, k, vertex_of(*ps[k], true), vertex_of(*ps[k], false)});
    }
    // a passage along the co-orientation enters on the negative side
    auto neg = [&](const Passage& p) { return vertex_of(p, p.direction > 0); };
    auto pos = [&](const Passage& p) { return vertex_of(p, p.direction < 0); };
    roles.push_back({RoleKind::Neg, c, 0, neg(*ps[0]), neg(*ps[1])});
    roles.push_back({RoleKind::Pos, c, 0, pos(*ps[0]), pos(*ps[1])});
  }
  for (const auto& strand : d.strands) {
    const std::size_t k = strand.passages.size();
    for (std::size_t i = 0; i < k; ++i)
      roles.push_back({RoleKind::Outer, 0, 0, vertex_of(strand.passages[i], false),
                       vertex_of(strand.passages[(i + 1) % k], true)});
  }
  return roles;
}

using EndpointKey = std::pair<std::string, std::string>;

EndpointKey key_of(const std::string& a, const std::string& b) {
  return a < b ? EndpointKey{a, b} : EndpointKey{b, a};
}

}  // namespace

std::vector<Violation> face_data_violations(const FaceData& faces) {
  DartGraph g;
  return build(faces, g);
}

std::string ring_vertex(const std::string& circle, Slot slot, bool in) {
  return circle + "." + slot_name(slot) + (in ? ".in" : ".out");
}

std::vector<Violation> ring_vertex_violations(const FALDiagram& d, const FaceData& fd) {
  std::vector<Violation> out;
  std::set<std::string> expected;
  for (const auto& c : d.circles)
    for (Slot s : {Slot::A, Slot::B})
      for (bool in : {true, false}) expected.insert(ring_vertex(c.id, s, in));

  std::map<std::string, int> valence;
  for (const auto& v : fd.vertices) {
    valence.emplace(v, 0);
    if (!expected.count(v))
      out.push_back({"unexpected_vertex", "vertex " + v + " is not a crossing of a ring"});
  }
  for (const auto& v : expected)
    if (!valence.count(v)) out.push_back({"missing_vertex", "ring vertex " + v + " is missing"});
  for (const auto& e : fd.edges) {
    if (valence.count(e.from)) ++valence[e.from];
    if (valence.count(e.to)) ++valence[e.to];
  }
  for (const auto& [v, n] : valence)
    if (n != 4)
      out.push_back({"vertex_valence", "vertex " + v + " has valence " + std::to_string(n) +
                                           " instead of 4"});
  return out;
}

int genus_of_embedding(const FaceData& faces) {
  checked_graph(faces);
  const long chi = static_cast<long>(faces.vertices.size()) - static_cast<long>(faces.edges.size()) +
                   static_cast<long>(faces.faces.size());
  if (chi > 2 || chi % 2 != 0)
    throw StructuralError("V - E + F = " + std::to_string(chi) + " is not the Euler characteristic of a closed orientable surface");
  return static_cast<int>((2 - chi) / 2);
}

bool is_cellular(const FALDiagram& diagram) {
  require_valid(diagram);
  if (!diagram.embedding) throw Error("embedding data required");
  return genus_of_embedding(*diagram.embedding) == diagram.surface_genus;
}

FaceData ring_embedding(const FALDiagram& d, const std::vector<bool>& mirrored) {
  require_valid(d);
  if (mirrored.size() != d.circles.size())
    throw DomainError("ring_embedding needs one mirror flag per crossing circle");

  FaceData fd;
  const auto sites = passage_sites(d);
  auto passage_at = [&](const PassageRef& r) -> const Passage& {
    return d.strands[r.strand].passages[r.index];
  };
  auto outer_id = [&](std::size_t s, std::size_t i) { return d.strands[s].id + "." + std::to_string(i); };

  for (const auto& c : d.circles)
    for (Slot s : {Slot::A, Slot::B})
      for (bool in : {true, false}) fd.vertices.push_back(ring_vertex(c.id, s, in));

  // (edge, leaves-this-vertex) darts in counter-clockwise order per vertex
  std::map<std::string, std::vector<std::string>> rotation;

  for (std::size_t c = 0; c < d.circles.size(); ++c) {
    const auto& id = d.circles[c].id;
    const auto& refs = sites.at(id);
    std::array<std::string, 2> top, bottom, inner, cap, outer_top, outer_bottom;
    for (int k = 0; k < 2; ++k) {
      const auto& p = passage_at(refs[k]);
      const Slot slot = k == 0 ? Slot::A : Slot::B;
      const std::string in = ring_vertex(id, slot, true);
      const std::string out = ring_vertex(id, slot, false);
      const bool up = p.direction > 0;
      top[k] = up ? out : in;
      bottom[k] = up ? in : out;
      inner[k] = id + "." + slot_name(slot) + ".s";
      cap[k] = id + "." + slot_name(slot) + ".r";
      fd.edges.push_back({inner[k], in, out});
      fd.edges.push_back({cap[k], in, out});
      const std::size_t len = d.strands[refs[k].strand].passages.size();
      const std::string arriving = outer_id(refs[k].strand, (refs[k].index + len - 1) % len);
      const std::string leaving = outer_id(refs[k].strand, refs[k].index);
      outer_top[k] = up ? leaving : arriving;
      outer_bottom[k] = up ? arriving : leaving;
    }
    const std::string neg = id + ".neg";
    const std::string pos = id + ".pos";
    fd.edges.push_back({neg, bottom[0], bottom[1]});
    fd.edges.push_back({pos, top[0], top[1]});

    std::array<std::vector<std::string>, 4> around{{
        {outer_top[0], cap[0], inner[0], pos},
        {inner[0], cap[0], outer_bottom[0], neg},
        {outer_top[1], pos, inner[1], cap[1]},
        {inner[1], neg, outer_bottom[1], cap[1]},
    }};
    const std::array<std::string, 4> at{top[0], bottom[0], top[1], bottom[1]};
    for (int v = 0; v < 4; ++v) {
      if (mirrored[c]) std::reverse(around[v].begin(), around[v].end());
      rotation[at[v]] = around[v];
    }
  }
  for (std::size_t s = 0; s < d.strands.size(); ++s) {
    const auto& ps = d.strands[s].passages;
    for (std::size_t i = 0; i < ps.size(); ++i)
      fd.edges.push_back({outer_id(s, i), ring_vertex(ps[i].circle, ps[i].slot, false),
                          ring_vertex(ps[(i + 1) % ps.size()].circle, ps[(i + 1) % ps.size()].slot, true)});
  }

  // Trace faces with the interior on the left: the next dart is the
  // clockwise neighbour of the reversed dart.
  std::map<std::string, std::size_t> edge_index;
  for (std::size_t e = 0; e < fd.edges.size(); ++e) edge_index[fd.edges[e].id] = e;
  const std::size_t darts = 2 * fd.edges.size();
  auto origin = [&](std::size_t dart) {
    const auto& e = fd.edges[dart / 2];
    return dart % 2 == 0 ? e.from : e.to;
  };
  // Position of every dart in its origin's rotation; parallel edges between
  // the same two vertices are told apart by the edge token alone.
  std::vector<std::size_t> clockwise(darts);
  for (std::size_t dart = 0; dart < darts; ++dart) {
    const auto& ring = rotation.at(origin(dart));
    const auto& eid = fd.edges[dart / 2].id;
    const auto it = std::find(ring.begin(), ring.end(), eid);
    const std::size_t pos = static_cast<std::size_t>(it - ring.begin());
    const auto& prev_edge = ring[(pos + ring.size() - 1) % ring.size()];
    const auto& pe = fd.edges[edge_index.at(prev_edge)];
    clockwise[dart] = 2 * edge_index.at(prev_edge) + (pe.from == origin(dart) ? 0 : 1);
  }
  std::vector<bool> used(darts, false);
  for (std::size_t start = 0; start < darts; ++start) {
    if (used[start]) continue;
    FaceWalk walk;
    for (std::size_t dart = start; !used[dart]; dart = clockwise[dart ^ 1U]) {
      used[dart] = true;
      walk.push_back({fd.edges[dart / 2].id, dart % 2 == 0});
    }
    fd.faces.push_back(std::move(walk));
  }
  return fd;
}

std::vector<RingCells> ring_cells(const FALDiagram& d) {
  require_valid(d);
  if (!d.embedding) throw Error("embedding data required");
  const FaceData& fd = *d.embedding;
  const DartGraph g = checked_graph(fd);

  const std::vector<Role> roles = ring_roles(d);
  std::map<EndpointKey, std::vector<std::size_t>> role_groups, edge_groups;
  for (std::size_t r = 0; r < roles.size(); ++r)
    role_groups[key_of(roles[r].from, roles[r].to)].push_back(r);
  for (std::size_t e = 0; e < fd.edges.size(); ++e)
    edge_groups[key_of(fd.edges[e].from, fd.edges[e].to)].push_back(e);
  if (role_groups.size() != edge_groups.size())
    throw StructuralError("face data edges do not match the ring layout of the diagram");
  for (const auto& [key, rs] : role_groups) {
    auto it = edge_groups.find(key);
    if (it == edge_groups.end() || it->second.size() != rs.size())
      throw StructuralError("face data has no matching edges between " + key.first + " and " +
                            key.second);
  }

  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (const auto& [key, rs] : role_groups) groups.emplace_back(edge_groups.at(key), rs);

  std::vector<std::optional<std::size_t>> role_of(fd.edges.size());
  std::vector<std::vector<std::size_t>> vertex_darts(fd.vertices.size());
  for (std::size_t dart = 0; dart < 2 * fd.edges.size(); ++dart)
    vertex_darts[g.origin[dart]].push_back(dart);

  // Strand and ring arcs alternate around every crossing.
  auto transverse_at = [&](std::size_t v) {
    for (std::size_t dart : vertex_darts[v])
      if (!role_of[dart / 2]) return true;
    for (std::size_t dart : vertex_darts[v]) {
      const bool here = roles[*role_of[dart / 2]].strand();
      const bool next = roles[*role_of[g.sigma[dart] / 2]].strand();
      const bool across = roles[*role_of[g.sigma[g.sigma[dart]] / 2]].strand();
      if (here == next || here != across) return false;
    }
    return true;
  };

  auto other_face = [&](std::size_t edge, std::size_t face) -> std::optional<std::size_t> {
    const std::size_t f0 = g.face_of[2 * edge], f1 = g.face_of[2 * edge + 1];
    if (f0 == face && f1 != face) return f1;
    if (f1 == face && f0 != face) return f0;
    return std::nullopt;
  };

  auto assemble = [&]() -> std::optional<std::vector<RingCells>> {
    std::map<std::pair<RoleKind, std::pair<std::size_t, int>>, std::size_t> edge_for;
    for (std::size_t e = 0; e < fd.edges.size(); ++e) {
      const Role& r = roles[*role_of[e]];
      if (r.kind != RoleKind::Outer) edge_for[{r.kind, {r.circle, r.slot}}] = e;
    }
    std::vector<RingCells> cells;
    for (std::size_t c = 0; c < d.circles.size(); ++c) {
      RingCells rc;
      rc.circle = d.circles[c].id;
      std::array<std::size_t, 2> middle{};
      for (int k = 0; k < 2; ++k) {
        const std::size_t cap = edge_for.at({RoleKind::Cap, {c, k}});
        const std::size_t inner = edge_for.at({RoleKind::Inner, {c, k}});
        std::optional<std::size_t> bigon;
        for (std::size_t dart : {2 * cap, 2 * cap + 1}) {
          const std::size_t f = g.face_of[dart];
          const auto& walk = g.faces[f];
          if (walk.size() == 2 && (walk[0] / 2 == inner || walk[1] / 2 == inner)) bigon = f;
        }
        if (!bigon) return std::nullopt;
        const auto beyond = other_face(cap, *bigon);
        const auto mid = other_face(inner, *bigon);
        if (!beyond || !mid) return std::nullopt;
        rc.cap_face[k] = *bigon;
        rc.beyond_cap[k] = *beyond;
        middle[k] = *mid;
      }
      if (middle[0] != middle[1] || g.faces[middle[0]].size() != 4) return std::nullopt;
      rc.middle_face = middle[0];
      const auto neg = other_face(edge_for.at({RoleKind::Neg, {c, 0}}), rc.middle_face);
      const auto pos = other_face(edge_for.at({RoleKind::Pos, {c, 0}}), rc.middle_face);
      if (!neg || !pos) return std::nullopt;
      rc.beyond_neg = *neg;
      rc.beyond_pos = *pos;
      cells.push_back(rc);
    }
    return cells;
  };

  std::optional<std::vector<RingCells>> found;
  std::function<void(std::size_t)> search = [&](std::size_t gi) {
    if (found) return;
    if (gi == groups.size()) {
      found = assemble();
      return;
    }
    const auto& [edges, rs] = groups[gi];
    std::vector<std::size_t> perm(rs.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      for (std::size_t i = 0; i < edges.size(); ++i) role_of[edges[i]] = rs[perm[i]];
      bool ok = true;
      for (std::size_t e : edges)
        ok = ok && transverse_at(g.origin[2 * e]) && transverse_at(g.origin[2 * e + 1]);
      if (ok) search(gi + 1);
      if (found) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t e : edges) role_of[e].reset();
  };
  search(0);

  if (!found) throw StructuralError("face data is not a ring layout of the diagram");
  return *found;
}

}  // namespace falkit
