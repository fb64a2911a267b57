#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>

namespace roundabout {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wraps an angle into [0, 2*pi).
inline double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Wraps an angle difference into (-pi, pi].
inline double wrap_pi(double angle) {
  double a = std::fmod(angle + kPi, kTwoPi);
  if (a <= 0.0) a += kTwoPi;
  return a - kPi;
}

inline Vec2 unit_vector(double heading) {
  return Vec2(std::cos(heading), std::sin(heading));
}

// Left-hand normal of the travel direction.
inline Vec2 left_normal(double heading) {
  return Vec2(-std::sin(heading), std::cos(heading));
}

inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

}  // namespace roundabout
