#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "falkit/nerve.hpp"

namespace falkit {

struct PackingOptions {
  double tolerance = 1e-10;
  std::size_t max_sweeps = 100000;
  /// Radius given to every boundary vertex unless overridden below.
  double boundary_radius = 1.0;
  std::map<std::string, double> boundary_radii;
  /// Sphere nerves: index of the triangle deleted to get a disc.
  std::size_t removed_triangle = 0;
};

struct Packing {
  std::vector<std::string> vertices;
  std::vector<double> radii;
  std::vector<Eigen::Vector2d> centers;
  std::vector<bool> boundary;
  /// Tangent pairs; every edge of the nerve.
  std::vector<std::array<std::size_t, 2>> edges;
  double max_angle_residual = 0.0;
  double max_tangency_residual = 0.0;
  std::size_t sweeps = 0;

  std::size_t index_of(const std::string& vertex) const;
  double radius(const std::string& vertex) const { return radii[index_of(vertex)]; }
  const Eigen::Vector2d& center(const std::string& vertex) const { return centers[index_of(vertex)]; }
};

/// Angle at a circle of radius r in the triangle of centres it forms with
/// tangent circles of radii ra and rb.
double corner_angle(double r, double ra, double rb);

/// Sum of corner angles of a vertex of radius r over its petals.
double flower_angle(double r, const std::vector<std::array<double, 2>>& petals);

/// Radius that brings the angle sum of a flower of k equal petals around a
/// circle of radius r, currently summing to theta, to 2π.
double uniform_neighbour_radius(double r, double theta, std::size_t k);

/// Solves radii so interior angle sums are 2π, then lays out centres.
/// Interior vertices are swept in sorted token order.
Packing solve_packing(const Nerve& nerve, const PackingOptions& options = {});
Packing solve_packing(const Nerve& nerve, double tolerance);

}  // namespace falkit
