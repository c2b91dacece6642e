#pragma once

#include <optional>
#include <string>

#include "falkit/diagram.hpp"
#include "falkit/lobachevsky.hpp"

namespace falkit {

/// 2 v_oct (c - chi(M)). Hyperbolicity of the complement is assumed.
double lower_bound(const FALDiagram& diagram);

/// Upper bound for cellular links in a thickened surface of genus g >= 1:
/// 10 v_tet c when g = 1, 6 v_oct c when g > 1.
double upper_bound_virtual(const FALDiagram& diagram);

/// (1 - (2π / ℓ)^2)^{3/2}, the volume factor of a filling whose slopes all
/// have normalised length at least ℓ > 2π.
double filling_factor(double min_slope_length);

/// Lower bound after inserting at least m >= 7 crossings at every crossing
/// circle; the slope length is at least m.
double dehn_filled_lower_bound(const FALDiagram& diagram, int m);

struct VolumeReport {
  double lower_bound = 0.0;
  std::optional<double> upper_bound;
  std::optional<double> dehn_filled_lower;
  /// Why the upper or filled bound is absent, when it was asked for.
  std::string upper_bound_note;
  std::string dehn_filled_note;

  bool hyperbolic_assumed = true;
  bool cellular_verified = false;
  bool chi_unverified = false;

  /// False when lower > upper, which points at bad input such as a wrong chi.
  bool consistent() const { return !upper_bound || lower_bound <= *upper_bound; }
};

/// Every bound that applies to the diagram. `dehn_m` requests the filled bound.
VolumeReport volume_report(const FALDiagram& diagram, std::optional<int> dehn_m = std::nullopt);

}  // namespace falkit
