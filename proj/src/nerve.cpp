#include "falkit/nerve.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "falkit/embedding.hpp"

namespace falkit {

namespace {

using EdgeKey = std::array<std::size_t, 2>;

EdgeKey undirected(std::size_t a, std::size_t b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::map<EdgeKey, std::vector<std::size_t>> edge_triangles(const Nerve& n) {
  std::map<EdgeKey, std::vector<std::size_t>> out;
  for (std::size_t t = 0; t < n.triangles.size(); ++t)
    for (int i = 0; i < 3; ++i)
      out[undirected(n.triangles[t][i], n.triangles[t][(i + 1) % 3])].push_back(t);
  return out;
}

}  // namespace

std::size_t Nerve::index_of(const std::string& vertex) const {
  auto it = std::find(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end()) throw DomainError("nerve has no vertex " + vertex);
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::array<std::size_t, 2>> nerve_edges(const Nerve& nerve) {
  std::vector<std::array<std::size_t, 2>> out;
  for (const auto& [key, ts] : edge_triangles(nerve)) out.push_back(key);
  return out;
}

long nerve_euler_characteristic(const Nerve& nerve) {
  return static_cast<long>(nerve.vertices.size()) - static_cast<long>(nerve_edges(nerve).size()) +
         static_cast<long>(nerve.triangles.size());
}

std::vector<std::size_t> boundary_vertices(const Nerve& nerve) {
  std::set<std::size_t> out;
  for (const auto& [key, ts] : edge_triangles(nerve))
    if (ts.size() == 1) out.insert(key.begin(), key.end());
  return {out.begin(), out.end()};
}

std::vector<std::string> nerve_violations(const Nerve& n) {
  std::vector<std::string> out;
  const std::size_t nv = n.vertices.size();
  if (n.triangles.empty()) out.push_back("nerve has no triangles");
  if (std::set<std::string>(n.vertices.begin(), n.vertices.end()).size() != nv)
    out.push_back("nerve vertex tokens repeat");

  std::set<std::array<std::size_t, 3>> seen;
  for (const auto& t : n.triangles) {
    if (t[0] >= nv || t[1] >= nv || t[2] >= nv) {
      out.push_back("triangle refers to a missing vertex");
      return out;
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      out.push_back("triangle repeats vertex " + n.vertices[t[0] == t[1] || t[0] == t[2] ? t[0] : t[1]]);
    auto sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second)
      out.push_back("triangle " + n.vertices[t[0]] + " " + n.vertices[t[1]] + " " + n.vertices[t[2]] +
                    " appears twice");
  }
  if (!out.empty()) return out;

  const auto edges = edge_triangles(n);
  std::size_t boundary_edges = 0;
  for (const auto& [key, ts] : edges) {
    if (ts.size() > 2)
      out.push_back("edge " + n.vertices[key[0]] + "-" + n.vertices[key[1]] + " lies on " +
                    std::to_string(ts.size()) + " triangles");
    if (ts.size() == 1) ++boundary_edges;
  }
  if (!out.empty()) return out;

  // The link of every vertex must be one path (boundary) or one cycle (interior).
  std::vector<std::vector<EdgeKey>> link(nv);
  for (const auto& t : n.triangles)
    for (int i = 0; i < 3; ++i) link[t[i]].push_back(undirected(t[(i + 1) % 3], t[(i + 2) % 3]));
  for (std::size_t v = 0; v < nv; ++v) {
    if (link[v].empty()) {
      out.push_back("vertex " + n.vertices[v] + " lies on no triangle");
      continue;
    }
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (const auto& e : link[v]) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    std::size_t ends = 0;
    for (const auto& [u, nb] : adj) {
      if (nb.size() == 1) ++ends;
      if (nb.size() > 2) ends = 99;
    }
    std::set<std::size_t> reached{adj.begin()->first};
    std::vector<std::size_t> stack{adj.begin()->first};
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto w : adj[u])
        if (reached.insert(w).second) stack.push_back(w);
    }
    if ((ends != 0 && ends != 2) || reached.size() != adj.size())
      out.push_back("neighbourhood of vertex " + n.vertices[v] + " is not a disc");
  }
  if (!out.empty()) return out;

  const long chi = nerve_euler_characteristic(n);
  if (boundary_edges == 0 && chi != 2)
    out.push_back("closed nerve has V - E + F = " + std::to_string(chi) + ", expected 2");
  if (boundary_edges > 0) {
    if (chi != 1) out.push_back("nerve with boundary has V - E + F = " + std::to_string(chi) + ", expected 1");
    if (!n.boundary.empty()) {
      auto given = n.boundary;
      std::sort(given.begin(), given.end());
      if (given != boundary_vertices(n)) out.push_back("declared boundary differs from the boundary edges");
    }
  }

  for (const auto& [key, ts] : edges) {
    if (ts.size() != 2) continue;
    // consistently oriented neighbours traverse the shared edge in opposite directions
    auto runs_forward = [&](std::size_t t) {
      for (int i = 0; i < 3; ++i)
        if (n.triangles[t][i] == key[0] && n.triangles[t][(i + 1) % 3] == key[1]) return true;
      return false;
    };
    if (runs_forward(ts[0]) == runs_forward(ts[1])) {
      out.push_back("triangles are not consistently oriented");
      break;
    }
  }
  return out;
}

Nerve::Type nerve_type(const Nerve& nerve) {
  const auto problems = nerve_violations(nerve);
  if (!problems.empty()) throw StructuralError("invalid nerve: " + problems.front());
  return boundary_vertices(nerve).empty() ? Nerve::Type::Sphere : Nerve::Type::Disc;
}

Nerve oriented(Nerve n) {
  if (n.triangles.empty()) return n;
  const auto edges = edge_triangles(n);
  std::vector<int> state(n.triangles.size(), 0);  // 0 unvisited, 1 kept, 2 flipped
  auto has_directed = [&](std::size_t t, std::size_t a, std::size_t b) {
    for (int i = 0; i < 3; ++i)
      if (n.triangles[t][i] == a && n.triangles[t][(i + 1) % 3] == b) return true;
    return false;
  };
  for (std::size_t root = 0; root < n.triangles.size(); ++root) {
    if (state[root]) continue;
    state[root] = 1;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop();
      for (int i = 0; i < 3; ++i) {
        const std::size_t a = n.triangles[t][i], b = n.triangles[t][(i + 1) % 3];
        for (std::size_t u : edges.at(undirected(a, b))) {
          if (u == t) continue;
          const bool clash = has_directed(u, a, b);
          if (!state[u]) {
            if (clash) std::swap(n.triangles[u][1], n.triangles[u][2]);
            state[u] = clash ? 2 : 1;
            queue.push(u);
          } else if (clash) {
            throw StructuralError("nerve is not orientable");
          }
        }
      }
    }
  }
  return n;
}

Nerve nerve_from_diagram(const FALDiagram& diagram) {
  require_valid(diagram);
  if (diagram.surface_genus != 0)
    throw UnsupportedError("circle packing needs a diagram on the sphere (surface genus 0)");
  if (!is_cellular(diagram)) throw DomainError("diagram is not cellular");

  const auto cells = ring_cells(diagram);
  std::map<std::size_t, std::size_t> region;  // face index -> nerve vertex
  std::set<std::size_t> outer;
  for (const auto& rc : cells) {
    outer.insert({rc.beyond_neg, rc.beyond_pos, rc.beyond_cap[0], rc.beyond_cap[1]});
  }
  Nerve n;
  for (std::size_t f : outer) {
    region[f] = n.vertices.size();
    n.vertices.push_back("F" + std::to_string(f + 1));
  }
  for (const auto& rc : cells)
    for (int k = 0; k < 2; ++k)
      n.triangles.push_back({region.at(rc.beyond_neg), region.at(rc.beyond_pos),
                             region.at(rc.beyond_cap[k])});

  std::vector<std::string> problems;
  for (const auto& t : n.triangles)
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      problems.push_back("a crossing disc meets the same white region twice");
      break;
    }
  if (problems.empty()) {
    // orientation is fixed below; every other defect is reported as is
    for (auto& p : nerve_violations(n))
      if (p != "triangles are not consistently oriented") problems.push_back(std::move(p));
  }
  if (problems.empty()) {
    try {
      n = oriented(std::move(n));
    } catch (const StructuralError& e) {
      problems.push_back(e.what());
    }
  }
  if (problems.empty() && !boundary_vertices(n).empty())
    problems.push_back("nerve is not closed");
  if (!problems.empty()) {
    std::string faces;
    for (const auto& rc : cells)
      faces += " " + rc.circle + ":{F" + std::to_string(rc.beyond_neg + 1) + ",F" +
               std::to_string(rc.beyond_pos + 1) + ",F" + std::to_string(rc.beyond_cap[0] + 1) +
               ",F" + std::to_string(rc.beyond_cap[1] + 1) + "}";
    throw StructuralError("nerve construction failed: " + problems.front() + "; regions" + faces);
  }
  return n;
}

}  // namespace falkit
