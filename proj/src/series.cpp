#include "conjunct/series.hpp"

#include <cmath>

#include "conjunct/angles.hpp"
#include "conjunct/ratio.hpp"

namespace conjunct {

void SeriesParams::validate() const {
  if (!(synodic > 0.0) || !std::isfinite(synodic)) {
    throw DomainError("synodic period must be positive");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("radius must be positive");
  if (!std::isfinite(advance) || !std::isfinite(epoch_longitude)) {
    throw DomainError("angles must be finite");
  }
}

double advance_angle(double slow_period, double synodic) {
  if (!(slow_period > 0.0)) throw DomainError("period must be positive");
  if (synodic < 0.0) throw DomainError("synodic period must be non-negative");
  return wrap_degrees(360.0 / slow_period * synodic);
}

std::vector<ConjunctionEvent> generate_series(const SeriesParams& params, std::size_t count) {
  params.validate();
  if (count == 0) throw DomainError("count must be at least 1");
  std::vector<ConjunctionEvent> events;
  events.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double dn = static_cast<double>(n);
    events.push_back({n, dn * params.synodic, wrap_degrees(params.epoch_longitude + dn * params.advance),
                      static_cast<int>(n % 3)});
  }
  return events;
}

std::vector<PlanePoint> trigon_points(const SeriesParams& params, std::size_t count) {
  std::vector<PlanePoint> points;
  points.reserve(count);
  for (const auto& e : generate_series(params, count)) {
    const double rad = to_radians(e.longitude);
    points.push_back({params.radius * std::cos(rad), params.radius * std::sin(rad)});
  }
  return points;
}

Families classify_families(std::span<const ConjunctionEvent> events) {
  Families f;
  for (const auto& e : events) f.members[e.index % 3].push_back(e);
  return f;
}

CycleCandidate score_cycle(const SeriesParams& params, std::size_t k) {
  CycleCandidate c;
  c.k = k;
  const double dk = static_cast<double>(k);
  // One multiplication per k; repeated addition would accumulate drift.
  c.signed_offset = wrap_signed_degrees(dk * params.advance);
  c.angular_offset = std::abs(c.signed_offset);
  c.total_years = dk * params.synodic;
  c.time_offset = std::abs(c.total_years - std::round(c.total_years));
  return c;
}

std::vector<CycleCandidate> cycle_search(const SeriesParams& params, std::size_t k_max,
                                         double angular_tol, double time_tol) {
  params.validate();
  if (k_max == 0) throw DomainError("k_max must be at least 1");
  if (angular_tol < 0.0 || time_tol < 0.0) throw DomainError("tolerances must be non-negative");

  std::vector<CycleCandidate> out;
  double best_angle = INFINITY;
  double best_time = INFINITY;
  for (std::size_t k = 1; k <= k_max; ++k) {
    CycleCandidate c = score_cycle(params, k);
    c.angular_record = c.angular_offset < best_angle;
    c.time_record = c.time_offset < best_time;
    c.within_tolerance = c.angular_offset <= angular_tol && c.time_offset <= time_tol;
    if (c.angular_record) best_angle = c.angular_offset;
    if (c.time_record) best_time = c.time_offset;
    if (c.angular_record || c.time_record || c.within_tolerance) out.push_back(c);
  }
  return out;
}

}  // namespace conjunct
