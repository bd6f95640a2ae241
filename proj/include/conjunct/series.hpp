#pragma once

// Conjunction-event series in time and longitude, the trigon plane geometry,
// family classification, and the cycle-synchronization search.
//
// Longitudes are double-precision degrees measured counter-clockwise (east)
// from the epoch conjunction C_0. The longitude step is an explicit parameter:
// the reference table uses 245.56 degrees, while evaluating
// (360 / 29.46) * 19.85 directly gives 242.566 degrees. Both are available,
// see `advance_angle`.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace conjunct {

struct SeriesParams {
  double synodic = 20.0;          // years between consecutive conjunctions
  double advance = 240.0;         // degrees of longitude between consecutive conjunctions
  double radius = 1.0;            // plane-geometry scale
  double epoch_longitude = 0.0;   // degrees

  /// Throws DomainError unless synodic > 0 and radius > 0.
  void validate() const;
};

struct ConjunctionEvent {
  std::size_t index = 0;
  double elapsed = 0.0;    // index * synodic
  double longitude = 0.0;  // [0, 360)
  int family = 0;          // index mod 3
};

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

struct Families {
  std::array<std::vector<ConjunctionEvent>, 3> members;
};

struct CycleCandidate {
  std::size_t k = 0;
  double angular_offset = 0.0;  // circular distance of k*advance from 0, in [0, 180]
  double signed_offset = 0.0;   // same, signed: positive east, in (-180, 180]
  double time_offset = 0.0;     // |k*synodic - round(k*synodic)|, in [0, 0.5]
  double total_years = 0.0;     // k*synodic
  bool within_tolerance = false;  // both offsets within the requested tolerances
  bool angular_record = false;    // strictly smaller angular_offset than every smaller k
  bool time_record = false;       // strictly smaller time_offset than every smaller k

  bool east() const { return signed_offset > 0.0; }
};

/// (360 / slow_period) * synodic, wrapped into [0, 360).
double advance_angle(double slow_period, double synodic);

std::vector<ConjunctionEvent> generate_series(const SeriesParams& params, std::size_t count);

/// c_n = r * exp(i * longitude_n), as (x, y).
std::vector<PlanePoint> trigon_points(const SeriesParams& params, std::size_t count);

Families classify_families(std::span<const ConjunctionEvent> events);

/// Scores k = 1..k_max. Returns every k within both tolerances plus every k
/// that sets a new record for either criterion, sorted by k.
std::vector<CycleCandidate> cycle_search(const SeriesParams& params, std::size_t k_max,
                                         double angular_tol, double time_tol);

/// Scores a single cycle length without any filtering.
CycleCandidate score_cycle(const SeriesParams& params, std::size_t k);

}  // namespace conjunct
