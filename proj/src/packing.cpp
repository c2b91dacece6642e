#include "falkit/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>

#include "falkit/error.hpp"

namespace falkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Flower {
  std::size_t vertex;
  std::vector<std::array<std::size_t, 2>> petals;
};

// Largest |angle sum - 2π| over interior flowers.
double angle_residual(const std::vector<Flower>& flowers, const std::vector<double>& r) {
  double worst = 0.0;
  std::vector<std::array<double, 2>> petals;
  for (const auto& f : flowers) {
    petals.clear();
    for (const auto& p : f.petals) petals.push_back({r[p[0]], r[p[1]]});
    worst = std::max(worst, std::abs(flower_angle(r[f.vertex], petals) - kTwoPi));
  }
  return worst;
}

double bisect_radius(const std::vector<std::array<double, 2>>& petals, double start) {
  double lo = start, hi = start;
  while (flower_angle(lo, petals) < kTwoPi) lo *= 0.5;
  while (flower_angle(hi, petals) > kTwoPi) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (flower_angle(mid, petals) > kTwoPi ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Eigen::Vector2d rotate(const Eigen::Vector2d& v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

}  // namespace

std::size_t Packing::index_of(const std::string& vertex) const {
  auto it = std::find(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end()) throw DomainError("packing has no vertex " + vertex);
  return static_cast<std::size_t>(it - vertices.begin());
}

double corner_angle(double r, double ra, double rb) {
  const double s = std::sqrt(ra * rb / ((r + ra) * (r + rb)));
  return 2.0 * std::asin(std::min(1.0, s));
}

double flower_angle(double r, const std::vector<std::array<double, 2>>& petals) {
  double sum = 0.0;
  for (const auto& p : petals) sum += corner_angle(r, p[0], p[1]);
  return sum;
}

double uniform_neighbour_radius(double r, double theta, std::size_t k) {
  const double kd = static_cast<double>(k);
  const double beta = std::sin(theta / (2.0 * kd));
  const double rho = r * beta / (1.0 - beta);
  const double delta = std::sin(std::numbers::pi / kd);
  return rho * (1.0 - delta) / delta;
}

Packing solve_packing(const Nerve& input, double tolerance) {
  PackingOptions options;
  options.tolerance = tolerance;
  return solve_packing(input, options);
}

Packing solve_packing(const Nerve& input, const PackingOptions& options) {
  if (!(options.tolerance > 0.0 && options.tolerance <= 1e-4))
    throw DomainError("packing tolerance must lie in (0, 1e-4]");
  if (!(options.boundary_radius > 0.0) || !std::isfinite(options.boundary_radius))
    throw DomainError("boundary radius must be positive");

  Nerve nerve = oriented(input);
  const auto kind = nerve_type(nerve);
  const std::size_t nv = nerve.vertices.size();

  Packing out;
  out.vertices = nerve.vertices;
  out.edges = nerve_edges(nerve);

  auto disc = nerve.triangles;
  if (kind == Nerve::Type::Sphere) {
    if (options.removed_triangle >= disc.size()) throw DomainError("removed triangle out of range");
    disc.erase(disc.begin() + static_cast<std::ptrdiff_t>(options.removed_triangle));
  }
  Nerve disc_nerve{nerve.vertices, disc, {}};
  out.boundary.assign(nv, false);
  for (auto v : boundary_vertices(disc_nerve)) out.boundary[v] = true;

  out.radii.assign(nv, options.boundary_radius);
  double boundary_sum = 0.0;
  std::size_t boundary_count = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!out.boundary[v]) continue;
    if (auto it = options.boundary_radii.find(nerve.vertices[v]); it != options.boundary_radii.end()) {
      if (!(it->second > 0.0) || !std::isfinite(it->second))
        throw DomainError("boundary radius of " + it->first + " must be positive");
      out.radii[v] = it->second;
    }
    boundary_sum += out.radii[v];
    ++boundary_count;
  }
  const double start = boundary_sum / static_cast<double>(boundary_count);

  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < nv; ++v)
    if (!out.boundary[v]) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return nerve.vertices[a] < nerve.vertices[b]; });

  std::vector<Flower> flowers;
  {
    std::vector<std::size_t> slot(nv, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      slot[order[i]] = i;
      flowers.push_back({order[i], {}});
      out.radii[order[i]] = start;
    }
    for (const auto& t : disc)
      for (int i = 0; i < 3; ++i)
        if (!out.boundary[t[i]]) flowers[slot[t[i]]].petals.push_back({t[(i + 1) % 3], t[(i + 2) % 3]});
  }

  // Iterate somewhat past the requested tolerance so that the layout error,
  // which accumulates along the traversal, stays inside it as well.
  const double target = options.tolerance / 16.0;
  std::vector<double> history;
  double residual = angle_residual(flowers, out.radii);
  std::vector<std::array<double, 2>> petals;
  while (residual >= target) {
    if (out.sweeps >= options.max_sweeps) {
      history.push_back(residual);
      throw ConvergenceError("packing did not converge after " + std::to_string(out.sweeps) +
                                 " sweeps (angle residual " + std::to_string(residual) + ")",
                             history);
    }
    for (const auto& f : flowers) {
      petals.clear();
      for (const auto& p : f.petals) petals.push_back({out.radii[p[0]], out.radii[p[1]]});
      const double r = out.radii[f.vertex];
      const double theta = flower_angle(r, petals);
      double next = uniform_neighbour_radius(r, theta, petals.size());
      if (!(next > 0.0) || !std::isfinite(next)) next = bisect_radius(petals, r);
      out.radii[f.vertex] = next;
    }
    ++out.sweeps;
    residual = angle_residual(flowers, out.radii);
    if (out.sweeps % 100 == 0) history.push_back(residual);
  }
  out.max_angle_residual = residual;

  // Layout: seed triangle counterclockwise, then breadth first across edges.
  out.centers.assign(nv, Eigen::Vector2d::Zero());
  std::vector<bool> placed(nv, false);
  std::vector<bool> done(disc.size(), false);
  std::map<std::array<std::size_t, 2>, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < disc.size(); ++t)
    for (int i = 0; i < 3; ++i) {
      auto a = disc[t][i], b = disc[t][(i + 1) % 3];
      by_edge[{std::min(a, b), std::max(a, b)}].push_back(t);
    }
  const auto& r = out.radii;
  auto place_third = [&](std::size_t a, std::size_t b, std::size_t c) {
    const Eigen::Vector2d dir = (out.centers[b] - out.centers[a]).normalized();
    out.centers[c] = out.centers[a] + (r[a] + r[c]) * rotate(dir, corner_angle(r[a], r[b], r[c]));
    placed[c] = true;
  };
  {
    const auto& seed = disc.front();
    out.centers[seed[0]] = Eigen::Vector2d::Zero();
    out.centers[seed[1]] = Eigen::Vector2d(r[seed[0]] + r[seed[1]], 0.0);
    placed[seed[0]] = placed[seed[1]] = true;
    place_third(seed[0], seed[1], seed[2]);
    done[0] = true;
  }
  std::queue<std::size_t> queue;
  queue.push(0);
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop();
    for (int i = 0; i < 3; ++i) {
      auto a = disc[t][i], b = disc[t][(i + 1) % 3];
      for (auto u : by_edge[{std::min(a, b), std::max(a, b)}]) {
        if (done[u]) continue;
        done[u] = true;
        const auto& tri = disc[u];
        for (int j = 0; j < 3; ++j)
          if (placed[tri[j]] && placed[tri[(j + 1) % 3]] && !placed[tri[(j + 2) % 3]])
            place_third(tri[j], tri[(j + 1) % 3], tri[(j + 2) % 3]);
        queue.push(u);
      }
    }
  }

  for (const auto& e : out.edges) {
    const double gap = (out.centers[e[0]] - out.centers[e[1]]).norm() - (r[e[0]] + r[e[1]]);
    out.max_tangency_residual = std::max(out.max_tangency_residual, std::abs(gap));
  }
  return out;
}

}  // namespace falkit
