#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "falkit/embedding.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace falkit;
using namespace falkit::testing;

namespace {

bool has_code(const std::vector<Violation>& vs, const std::string& code) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.code == code; });
}

FaceData renamed(const FaceData& fd) {
  auto v = [](const std::string& s) { return "x_" + s; };
  auto e = [](const std::string& s) { return "e_" + s; };
  FaceData out;
  for (const auto& x : fd.vertices) out.vertices.push_back(v(x));
  for (const auto& x : fd.edges) out.edges.push_back({e(x.id), v(x.from), v(x.to)});
  for (const auto& f : fd.faces) {
    out.faces.emplace_back();
    for (const auto& d : f) out.faces.back().push_back({e(d.edge), d.forward});
  }
  return out;
}

}  // namespace

TEST_CASE("borromean layout is a planar ring embedding") {
  const auto d = load_example("borromean.fal");
  REQUIRE(d.embedding);
  const auto& fd = *d.embedding;
  CHECK(fd.vertices.size() == 8);
  CHECK(fd.edges.size() == 16);
  CHECK(fd.faces.size() == 10);
  CHECK(genus_of_embedding(fd) == 0);
  CHECK(is_cellular(d));
  CHECK(validate(d).ok());
}

TEST_CASE("torus chain layout has genus one") {
  const auto d = load_example("torus_chain.fal");
  const auto& fd = *d.embedding;
  CHECK(fd.vertices.size() == 4);
  CHECK(fd.edges.size() == 8);
  CHECK(fd.faces.size() == 4);
  CHECK(genus_of_embedding(fd) == 1);
  CHECK(is_cellular(d));
}

TEST_CASE("cellularity fails when the layout genus differs from the surface") {
  auto d = load_example("borromean.fal");
  d.surface_genus = 1;
  d.manifold = ThickenedSurface{1};
  REQUIRE(validate(d).ok());
  CHECK_FALSE(is_cellular(d));
}

TEST_CASE("cellularity needs face data") {
  CHECK_THROWS_AS(is_cellular(borromean_bare()), Error);
}

TEST_CASE("face walks use every edge side once") {
  for (const char* name : {"borromean.fal", "torus_chain.fal", "genus2_three_circles.fal", "planar_c5.fal"}) {
    const auto fd = *load_example(name).embedding;
    std::size_t sides = 0;
    for (const auto& f : fd.faces) sides += f.size();
    CHECK(sides == 2 * fd.edges.size());
    CHECK(face_data_violations(fd).empty());
  }
}

TEST_CASE("genus is invariant under renaming and reordering") {
  std::mt19937_64 rng(4);
  for (const char* name : {"borromean.fal", "torus_chain.fal", "genus2_three_circles.fal", "planar_c6.fal"}) {
    const auto fd = *load_example(name).embedding;
    const int g = genus_of_embedding(fd);
    CHECK(genus_of_embedding(renamed(fd)) == g);
    for (int k = 0; k < 10; ++k) {
      auto shuffled = fd;
      std::shuffle(shuffled.faces.begin(), shuffled.faces.end(), rng);
      std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);
      std::shuffle(shuffled.vertices.begin(), shuffled.vertices.end(), rng);
      for (auto& f : shuffled.faces) std::rotate(f.begin(), f.begin() + static_cast<long>(rng() % f.size()), f.end());
      CHECK(genus_of_embedding(shuffled) == g);
    }
  }
}

TEST_CASE("malformed face data is reported") {
  const auto good = *load_example("borromean.fal").embedding;
  SUBCASE("missing face") {
    auto fd = good;
    fd.faces.pop_back();
    CHECK(has_code(face_data_violations(fd), "edge_side_count"));
    CHECK_THROWS_AS(genus_of_embedding(fd), StructuralError);
  }
  SUBCASE("unknown edge") {
    auto fd = good;
    fd.faces[0][0].edge = "ghost";
    CHECK(has_code(face_data_violations(fd), "unknown_edge"));
  }
  SUBCASE("duplicate edge") {
    auto fd = good;
    fd.edges.push_back(fd.edges.front());
    CHECK(has_code(face_data_violations(fd), "duplicate_edge"));
  }
  SUBCASE("walk that does not chain") {
    auto fd = good;
    fd.faces[0][0].forward = !fd.faces[0][0].forward;
    CHECK_FALSE(face_data_violations(fd).empty());
  }
  SUBCASE("unknown vertex") {
    auto fd = good;
    fd.edges[0].to = "nowhere";
    CHECK(has_code(face_data_violations(fd), "unknown_vertex"));
  }
  SUBCASE("ring vertices must match the circles") {
    auto d = load_example("borromean.fal");
    d.circles[1].id = "C9";
    for (auto& s : d.strands)
      for (auto& p : s.passages)
        if (p.circle == "C2") p.circle = "C9";
    const auto vs = ring_vertex_violations(d, *d.embedding);
    CHECK(has_code(vs, "unexpected_vertex"));
    CHECK(has_code(vs, "missing_vertex"));
  }
}

TEST_CASE("ring embedding counts") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_diagram(rng, 5, 3, false);
    std::vector<bool> mirror(d.circles.size());
    for (std::size_t k = 0; k < mirror.size(); ++k) mirror[k] = rng() & 1;
    const auto fd = ring_embedding(d, mirror);
    const std::size_t c = d.circles.size();
    CHECK(fd.vertices.size() == 4 * c);
    CHECK(fd.edges.size() == 8 * c);
    CHECK(face_data_violations(fd).empty());
    CHECK(ring_vertex_violations(d, fd).empty());
    const int g = genus_of_embedding(fd);
    CHECK(g >= 0);
    CHECK(static_cast<long>(fd.faces.size()) == 2 - 2L * g + 4L * static_cast<long>(c));
  }
}

TEST_CASE("ring cells around the borromean circles") {
  const auto d = load_example("borromean.fal");
  const auto cells = ring_cells(d);
  REQUIRE(cells.size() == 2);
  const auto& fd = *d.embedding;
  for (const auto& rc : cells) {
    CHECK(fd.faces[rc.cap_face[0]].size() == 2);
    CHECK(fd.faces[rc.cap_face[1]].size() == 2);
    CHECK(fd.faces[rc.middle_face].size() == 4);
    CHECK(rc.beyond_neg != rc.beyond_pos);
  }
  // the four outer regions of the planar picture
  std::set<std::size_t> outer;
  for (const auto& rc : cells) outer.insert({rc.beyond_neg, rc.beyond_pos, rc.beyond_cap[0], rc.beyond_cap[1]});
  CHECK(outer.size() == 4);
}

TEST_CASE("ring cells are found again after renaming edge tokens") {
  auto d = load_example("planar_c4.fal");
  const auto before = ring_cells(d);
  auto& fd = *d.embedding;
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < fd.edges.size(); ++i) names[fd.edges[i].id] = "z" + std::to_string(i);
  for (auto& e : fd.edges) e.id = names[e.id];
  for (auto& f : fd.faces)
    for (auto& dart : f) dart.edge = names[dart.edge];
  const auto after = ring_cells(d);
  REQUIRE(after.size() == before.size());
  for (std::size_t i = 0; i < after.size(); ++i) {
    CHECK(after[i].beyond_neg == before[i].beyond_neg);
    CHECK(after[i].beyond_pos == before[i].beyond_pos);
    CHECK(after[i].middle_face == before[i].middle_face);
  }
}
