#pragma once

// Uniform circular motion of bodies that all start at longitude 0 at t = 0.

#include <string>
#include <string_view>

#include "conjunct/ratio.hpp"

namespace conjunct {

enum class TimeUnit { hours, years };

std::string_view to_string(TimeUnit unit);
TimeUnit parse_time_unit(std::string_view text);

/// A named body revolving uniformly with an exact orbital period.
struct Body {
  std::string name;
  Ratio period;  // in `units`
  TimeUnit units = TimeUnit::years;

  /// Validating factory; period must be positive.
  static Body make(std::string name, Ratio period, TimeUnit units);
};

/// Degrees per time unit.
struct AngularVelocity {
  Ratio value;
};

/// An exact angle normalized into [0, 360) degrees.
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Ratio& degrees);

  const Ratio& exact() const { return degrees_; }
  double degrees() const { return degrees_.to_double(); }

  /// Fixed-point rendering; `precision` affects display only.
  std::string format(int precision = 2) const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  Ratio degrees_;
};

AngularVelocity angular_velocity(const Body& b);

/// omega(p) - omega(e), may be negative. Bodies must share units.
Ratio relative_angular_velocity(const Body& p, const Body& e);

/// (360 / period) * t mod 360. Requires t >= 0.
Angle position(const Body& b, const Ratio& t);

/// Time between consecutive conjunctions: tA*tB / (tB - tA).
/// Argument order does not matter. Equal periods raise DomainError.
Ratio synodic_period(const Body& a, const Body& b);

/// Exact longitude swing of the slower body between consecutive conjunctions.
Angle advance_angle(const Ratio& slow_period, const Ratio& synodic);

}  // namespace conjunct
