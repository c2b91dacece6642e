#include "falkit/volume.hpp"

#include <cmath>
#include <numbers>
#include <variant>

#include "falkit/embedding.hpp"

namespace falkit {

double lower_bound(const FALDiagram& diagram) {
  require_valid(diagram);
  const double c = static_cast<double>(count_crossing_circles(diagram));
  return 2.0 * octahedron_volume() * (c - euler_characteristic(diagram.manifold));
}

double upper_bound_virtual(const FALDiagram& diagram) {
  require_valid(diagram);
  const auto* thickened = std::get_if<ThickenedSurface>(&diagram.manifold);
  if (!thickened)
    throw UnsupportedError("upper bound needs a thickened surface, got " +
                           describe(diagram.manifold));
  if (thickened->genus == 0)
    throw DomainError("upper bound does not cover genus 0 thickened surfaces");
  if (!is_cellular(diagram)) throw DomainError("cellularity hypothesis fails");
  const double c = static_cast<double>(count_crossing_circles(diagram));
  return thickened->genus == 1 ? 10.0 * tetrahedron_volume() * c : 6.0 * octahedron_volume() * c;
}

double filling_factor(double min_slope_length) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(min_slope_length > two_pi))
    throw DomainError("filling factor needs slope length above 2π");
  const double r = two_pi / min_slope_length;
  return std::pow(1.0 - r * r, 1.5);
}

double dehn_filled_lower_bound(const FALDiagram& diagram, int m) {
  if (m < 7) throw DomainError("hypothesis m >= 7 violated (m = " + std::to_string(m) + ")");
  return filling_factor(static_cast<double>(m)) * lower_bound(diagram);
}

VolumeReport volume_report(const FALDiagram& diagram, std::optional<int> dehn_m) {
  VolumeReport r;
  r.lower_bound = lower_bound(diagram);
  r.chi_unverified = chi_user_asserted(diagram.manifold);
  r.cellular_verified = diagram.embedding.has_value() && is_cellular(diagram);
  try {
    r.upper_bound = upper_bound_virtual(diagram);
  } catch (const Error& e) {
    r.upper_bound_note = e.what();
  }
  if (dehn_m) {
    try {
      r.dehn_filled_lower = dehn_filled_lower_bound(diagram, *dehn_m);
    } catch (const Error& e) {
      r.dehn_filled_note = e.what();
    }
  }
  return r;
}

}  // namespace falkit
