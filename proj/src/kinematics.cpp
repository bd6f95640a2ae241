#include "conjunct/kinematics.hpp"

#include "conjunct/text.hpp"

namespace conjunct {

namespace {
const Ratio kFullTurn{360};
}

std::string_view to_string(TimeUnit unit) {
  return unit == TimeUnit::hours ? "hours" : "years";
}

TimeUnit parse_time_unit(std::string_view text) {
  if (text == "h" || text == "hour" || text == "hours") return TimeUnit::hours;
  if (text == "y" || text == "yr" || text == "year" || text == "years") return TimeUnit::years;
  throw ParseError("unknown time unit '" + std::string(text) + "'");
}

Body Body::make(std::string name, Ratio period, TimeUnit units) {
  if (period.sign() <= 0) {
    throw DomainError("body '" + name + "' must have a positive period");
  }
  return Body{std::move(name), std::move(period), units};
}

Angle::Angle(const Ratio& degrees) : degrees_(floor_mod(degrees, kFullTurn)) {}

std::string Angle::format(int precision) const { return fixed(degrees(), precision); }

AngularVelocity angular_velocity(const Body& b) {
  if (b.period.sign() <= 0) throw DomainError("period must be positive");
  return {kFullTurn / b.period};
}

Ratio relative_angular_velocity(const Body& p, const Body& e) {
  if (p.units != e.units) {
    throw DomainError("unit mismatch: '" + p.name + "' in " + std::string(to_string(p.units)) +
                      ", '" + e.name + "' in " + std::string(to_string(e.units)));
  }
  return angular_velocity(p).value - angular_velocity(e).value;
}

Angle position(const Body& b, const Ratio& t) {
  if (t.sign() < 0) throw DomainError("time must be non-negative");
  return Angle(angular_velocity(b).value * t);
}

Ratio synodic_period(const Body& a, const Body& b) {
  Ratio rel = relative_angular_velocity(a, b);
  if (rel.is_zero()) {
    throw DomainError("degenerate pair: bodies never separate ('" + a.name + "' and '" + b.name +
                      "' share period " + a.period.str() + ")");
  }
  const Body& fast = a.period < b.period ? a : b;
  const Body& slow = a.period < b.period ? b : a;
  return fast.period * slow.period / (slow.period - fast.period);
}

Angle advance_angle(const Ratio& slow_period, const Ratio& synodic) {
  if (slow_period.sign() <= 0) throw DomainError("period must be positive");
  if (synodic.sign() < 0) throw DomainError("synodic period must be non-negative");
  return Angle(kFullTurn / slow_period * synodic);
}

}  // namespace conjunct
