#pragma once

#include <cmath>
#include <numbers>

namespace conjunct {

/// Wrap into [0, 360).
inline double wrap_degrees(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  // fmod of a tiny negative value can round up to exactly 360.
  return w >= 360.0 ? 0.0 : w;
}

/// Wrap into (-180, 180]; positive means counter-clockwise (east).
inline double wrap_signed_degrees(double deg) {
  double w = wrap_degrees(deg);
  return w > 180.0 ? w - 360.0 : w;
}

/// min(d mod 360, 360 - d mod 360), always in [0, 180].
inline double circular_distance(double a_deg, double b_deg) {
  double d = wrap_degrees(a_deg - b_deg);
  return d > 180.0 ? 360.0 - d : d;
}

inline double to_radians(double deg) { return deg * std::numbers::pi / 180.0; }
inline double to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace conjunct
