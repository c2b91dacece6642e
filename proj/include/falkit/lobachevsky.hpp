#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>

namespace falkit {

namespace detail {

/// zeta(s) for integer s >= 2: partial sum plus an Euler-Maclaurin tail.
template <std::floating_point T>
T zeta_even(int s) {
  constexpr int kTerms = 100;
  T sum = 0;
  for (int k = kTerms - 1; k >= 1; --k) sum += std::pow(T(k), T(-s));
  const T n = kTerms;
  const T ss = s;
  sum += std::pow(n, 1 - ss) / (ss - 1) + std::pow(n, -ss) / 2 + ss * std::pow(n, -ss - 1) / 12 -
         ss * (ss + 1) * (ss + 2) * std::pow(n, -ss - 3) / 720;
  return sum;
}

constexpr std::size_t kLobachevskyTerms = 64;

/// c_n = zeta(2n) / (n (2n + 1)), n = 1..kLobachevskyTerms.
template <std::floating_point T>
const std::array<T, kLobachevskyTerms>& lobachevsky_coefficients() {
  static const std::array<T, kLobachevskyTerms> table = [] {
    std::array<T, kLobachevskyTerms> c{};
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      c[i] = zeta_even<T>(2 * n) / (T(n) * T(2 * n + 1));
    }
    return c;
  }();
  return table;
}

}  // namespace detail

/// Lobachevsky function  Λ(θ) = -∫_0^θ log|2 sin t| dt = ½ Σ sin(2nθ)/n².
///
/// Evaluated on the reduced argument t ∈ (-π/2, π/2] from
///   Λ(t) = t - t log(2|t|) + Σ_{n≥1} ζ(2n)/(n(2n+1)) · t (t/π)^{2n},
/// whose terms shrink at least like 4^{-n}; summation is compensated.
template <std::floating_point T>
T lobachevsky(T theta) {
  using std::abs;
  using std::log;
  constexpr T pi = std::numbers::pi_v<T>;
  if (!std::isfinite(theta)) return std::numeric_limits<T>::quiet_NaN();

  T t = theta - pi * std::round(theta / pi);
  if (t > pi / 2) t -= pi;
  if (t <= -pi / 2) t += pi;
  if (t == T(0)) return T(0);
  const T sign = t < 0 ? T(-1) : T(1);
  t = abs(t);

  const auto& c = detail::lobachevsky_coefficients<T>();
  const T ratio = (t / pi) * (t / pi);
  T sum = t - t * log(2 * t);
  T compensation = 0;
  T power = t;
  for (std::size_t i = 0; i < c.size(); ++i) {
    power *= ratio;
    const T term = c[i] * power;
    const T y = term - compensation;
    const T next = sum + y;
    compensation = (next - sum) - y;
    sum = next;
    if (abs(term) < std::numeric_limits<T>::epsilon() * T(1e-3)) break;
  }
  return sign * sum;
}

/// Volume of the regular ideal octahedron, 8 Λ(π/4).
template <std::floating_point T = double>
T octahedron_volume() {
  static const T v = 8 * lobachevsky<T>(std::numbers::pi_v<T> / 4);
  return v;
}

/// Volume of the regular ideal tetrahedron, 3 Λ(π/3).
template <std::floating_point T = double>
T tetrahedron_volume() {
  static const T v = 3 * lobachevsky<T>(std::numbers::pi_v<T> / 3);
  return v;
}

}  // namespace falkit
