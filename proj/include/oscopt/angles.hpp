#pragma once

#include <cmath>
#include <numbers>

namespace oscopt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wrap an angle to (-pi, pi]. Exactly odd away from the pi boundary:
/// wrap_pi(-x) == -wrap_pi(x) whenever wrap_pi(x) != pi.
inline double wrap_pi(double x) {
  double w = x - kTwoPi * std::floor(x / kTwoPi);  // [0, 2pi)
  if (w > kPi) w -= kTwoPi;
  return w;
}

/// Wrap an angle to [0, 2pi).
inline double wrap_2pi(double x) {
  double w = x - kTwoPi * std::floor(x / kTwoPi);
  if (w >= kTwoPi) w = 0.0;  // guard against rounding at the boundary
  if (w < 0.0) w += kTwoPi;
  return w;
}

/// Distance between two angles along the circle, in [0, pi].
inline double wrapped_distance(double a, double b) {
  return std::fabs(wrap_pi(a - b));
}

}  // namespace oscopt
