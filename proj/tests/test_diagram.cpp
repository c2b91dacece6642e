#include <doctest.h>

#include <algorithm>

#include "falkit/diagram.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace falkit;
using namespace falkit::testing;

namespace {

std::multiset<std::size_t> knot_sizes(const ResolvedLink& r) {
  std::multiset<std::size_t> out;
  for (const auto& c : r.components)
    if (!c.is_crossing_circle()) out.insert(c.passage_count());
  return out;
}

}  // namespace

TEST_CASE("euler characteristic of each manifold kind") {
  CHECK(euler_characteristic(Ball{}) == 1);
  CHECK(euler_characteristic(Handlebody{2}) == -1);
  CHECK(euler_characteristic(ThickenedSurface{1}) == 0);
  CHECK(euler_characteristic(ThickenedSurface{3}) == -4);
  CHECK(euler_characteristic(CustomManifold{-3, "x"}) == -3);
  CHECK(chi_user_asserted(CustomManifold{0, "x"}));
  CHECK_FALSE(chi_user_asserted(Ball{}));
}

TEST_CASE("borromean pattern is valid with two circles") {
  const auto d = borromean_bare();
  CHECK(validate(d).ok());
  CHECK(count_crossing_circles(d) == 2);
}

TEST_CASE("validation codes") {
  SUBCASE("circle met once") {
    auto d = borromean_bare();
    d.strands[0].passages.pop_back();
    const auto r = validate(d);
    CHECK(r.has("circle_passage_count"));
  }
  SUBCASE("unknown circle") {
    auto d = borromean_bare();
    d.strands[0].passages[0].circle = "C9";
    CHECK(validate(d).has("unknown_circle"));
  }
  SUBCASE("slot used twice") {
    auto d = borromean_bare();
    d.strands[0].passages[2].slot = Slot::A;
    const auto r = validate(d);
    CHECK(r.has("duplicate_slot"));
  }
  SUBCASE("disconnected") {
    auto d = borromean_bare();
    d.circles.push_back({"C3", HalfTwist::None});
    d.strands.push_back({"L", {{"C3", Slot::A, 1}, {"C3", Slot::B, -1}}});
    CHECK(validate(d).has("disconnected"));
  }
  SUBCASE("genus mismatch") {
    auto d = borromean_bare();
    d.surface_genus = 1;
    CHECK(validate(d).has("genus_mismatch"));
    d.manifold = ThickenedSurface{2};
    CHECK(validate(d).has("genus_mismatch"));
    d.manifold = ThickenedSurface{1};
    CHECK(validate(d).ok());
  }
  SUBCASE("no strands") {
    FALDiagram d;
    CHECK(validate(d).has("no_strands"));
  }
  SUBCASE("bad direction") {
    auto d = borromean_bare();
    d.strands[0].passages[1].direction = 0;
    CHECK(validate(d).has("bad_direction"));
  }
  SUBCASE("duplicate id") {
    auto d = borromean_bare();
    d.strands[0].id = "C1";
    CHECK(validate(d).has("duplicate_id"));
  }
  SUBCASE("require_valid throws with the report") {
    auto d = borromean_bare();
    d.strands.clear();
    try {
      require_valid(d);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.report().has("no_strands"));
    }
  }
}

TEST_CASE("borromean resolves into two circles and one knot through four discs") {
  const auto r = resolve_components(borromean_bare());
  REQUIRE(r.components.size() == 3);
  CHECK(r.components[0].id == "C1");
  CHECK(r.components[1].id == "C2");
  CHECK(r.components[2].id == "K");
  CHECK(r.components[2].passage_count() == 4);
  CHECK(r.surface_knot_count() == 1);
  CHECK(r.find("K") != nullptr);
  CHECK(r.find("nope") == nullptr);
}

TEST_CASE("half twist splits, keeps or merges strands") {
  // parallel: both passages of C1 run the same way along K
  auto d = borromean_bare();
  d.circles[0].half_twist = HalfTwist::Positive;
  auto r = resolve_components(d);
  CHECK(r.surface_knot_count() == 2);
  CHECK(r.find("K") == nullptr);

  // antiparallel
  auto e = borromean_bare();
  e.strands[0].passages[2].direction = -1;
  e.circles[0].half_twist = HalfTwist::Negative;
  CHECK(resolve_components(e).surface_knot_count() == 1);

  // two strands through one circle
  FALDiagram f;
  f.circles = {{"C1", HalfTwist::None}};
  f.strands = {{"K", {{"C1", Slot::A, 1}}}, {"L", {{"C1", Slot::B, -1}}}};
  CHECK(resolve_components(f).surface_knot_count() == 2);
  f.circles[0].half_twist = HalfTwist::Positive;
  r = resolve_components(f);
  REQUIRE(r.surface_knot_count() == 1);
  CHECK(r.components.back().passage_count() == 2);
}

TEST_CASE("block entry and exit passages chain along a component") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_diagram(rng, 4, 3, true);
    const auto r = resolve_components(d);
    for (const auto& c : r.components) {
      if (c.is_crossing_circle()) continue;
      for (std::size_t k = 0; k < c.blocks.size(); ++k) {
        const auto& exit = block_exit_passage(d, c.blocks[k]);
        const auto& entry = block_entry_passage(d, c.blocks[(k + 1) % c.blocks.size()]);
        CHECK(exit.circle == entry.circle);
      }
    }
  }
}

TEST_CASE("lane oracle agrees on random diagrams") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_diagram(rng, 5, 3, true);
    const auto r = resolve_components(d);
    CHECK(knot_arcs(r) == lane_components(d).knots);
  }
}

TEST_CASE("toggling a half twist twice restores the components") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto d = random_diagram(rng, 4, 3, true);
    const auto before = knot_arcs(resolve_components(d));
    const std::size_t c = rng() % d.circles.size();
    const auto original = d.circles[c].half_twist;
    d.circles[c].half_twist = has_half_twist(original) ? HalfTwist::None : HalfTwist::Positive;
    d.circles[c].half_twist = original;
    CHECK(knot_arcs(resolve_components(d)) == before);

    auto twisted = d;
    twisted.circles[c].half_twist = has_half_twist(original) ? HalfTwist::None : HalfTwist::Negative;
    auto back = twisted;
    back.circles[c].half_twist = original;
    CHECK(knot_arcs(resolve_components(back)) == before);
  }
}

TEST_CASE("rotating strand starts does not change the resolution") {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_diagram(rng, 4, 3, true);
    const auto r = resolve_components(d);
    for (std::size_t shift = 1; shift < 4; ++shift) {
      const auto rd = resolve_components(rotate_strands(d, shift));
      CHECK(rd.components.size() == r.components.size());
      CHECK(knot_sizes(rd) == knot_sizes(r));
    }
  }
}

TEST_CASE("passages sum to twice the circle count") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_diagram(rng, 6, 4, true);
    std::size_t sum = 0;
    for (auto n : knot_sizes(resolve_components(d))) sum += n;
    CHECK(sum == 2 * count_crossing_circles(d));
  }
}
