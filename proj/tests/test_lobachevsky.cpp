#include <doctest.h>

#include <cmath>
#include <numbers>

#include "falkit/lobachevsky.hpp"
#include "support/generators.hpp"
#include "support/oracle_values.hpp"

using namespace falkit;
namespace o = falkit::oracle;

constexpr double pi = std::numbers::pi;

TEST_CASE("polyhedron volumes") {
  CHECK(std::abs(lobachevsky(pi / 4) - o::kLobPi4) < 1e-15);
  CHECK(std::abs(lobachevsky(pi / 3) - o::kLobPi3) < 1e-15);
  CHECK(std::abs(octahedron_volume() - o::kVOct) < 1e-14);
  CHECK(std::abs(tetrahedron_volume() - o::kVTet) < 1e-14);
  CHECK(std::abs(octahedron_volume() - 3.66386) < 5e-6);
}

TEST_CASE("reference points") {
  CHECK(std::abs(lobachevsky(0.1) - o::kLob0_1) < 1e-14);
  CHECK(std::abs(lobachevsky(1.0) - o::kLob1) < 1e-14);
  CHECK(std::abs(lobachevsky(2.0) - o::kLob2) < 1e-14);
  CHECK(std::abs(lobachevsky(2.5) - o::kLob2_5) < 1e-14);
  CHECK(std::abs(lobachevsky(-0.7) - o::kLobM0_7) < 1e-14);
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::abs(lobachevsky(pi / 2)) < 1e-15);
  CHECK(std::isnan(lobachevsky(INFINITY)));
}

TEST_CASE("odd and pi periodic") {
  for (int i = 0; i < 1000; ++i) {
    const double t = -7.0 + 14.0 * i / 999.0;
    const double v = lobachevsky(t);
    CHECK(std::abs(lobachevsky(-t) + v) < 1e-13);
    CHECK(std::abs(lobachevsky(t + pi) - v) < 1e-13);
  }
}

TEST_CASE("agrees with quadrature of the defining integral") {
  for (int i = 1; i <= 200; ++i) {
    const double t = 0.75 * pi * i / 200.0;
    CHECK(std::abs(lobachevsky(t) - falkit::testing::lobachevsky_quadrature(t)) < 1e-12);
  }
}

TEST_CASE("duplication formula") {
  // Λ(2θ) = 2Λ(θ) + 2Λ(θ + π/2)
  for (int i = 1; i < 100; ++i) {
    const double t = 0.031 * i;
    CHECK(std::abs(lobachevsky(2 * t) - 2 * lobachevsky(t) - 2 * lobachevsky(t + pi / 2)) < 1e-13);
  }
}

TEST_CASE("other floating point types") {
  CHECK(std::abs(static_cast<double>(octahedron_volume<long double>()) - o::kVOct) < 1e-15);
  CHECK(std::abs(octahedron_volume<float>() - static_cast<float>(o::kVOct)) < 1e-5f);
}
