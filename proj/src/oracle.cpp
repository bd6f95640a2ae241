#include "conjunct/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conjunct/angles.hpp"

namespace conjunct {

namespace {

double degrees_per_unit(const Body& b) { return 360.0 / b.period.to_double(); }

void check_units(const Body& a, const Body& b) {
  if (a.units != b.units) throw DomainError("unit mismatch between '" + a.name + "' and '" + b.name + "'");
}

}  // namespace

void SimConfig::validate() const {
  if (!(dt > 0.0) || !(t_end > dt)) throw DomainError("simulation requires 0 < dt < t_end");
  if (!(refine_tol > 0.0) || !(refine_tol < dt)) {
    throw DomainError("simulation requires 0 < refine_tol < dt");
  }
}

double simulated_longitude(const Body& b, double t) {
  const double revolutions = t / b.period.to_double();
  return wrap_degrees(360.0 * (revolutions - std::floor(revolutions)));
}

double max_pair_step(const Body& a, const Body& b) {
  check_units(a, b);
  const double rel = std::abs(degrees_per_unit(a) - degrees_per_unit(b));
  if (rel == 0.0) throw DomainError("degenerate pair: bodies never separate");
  return 360.0 / rel / 2.0;
}

SimConfig default_pair_config(const Body& a, const Body& b, double t_end, double refine_tol) {
  return {max_pair_step(a, b) / 50.0, t_end, refine_tol};
}

std::vector<double> detect_pair_conjunctions(const Body& a, const Body& b, const SimConfig& cfg) {
  cfg.validate();
  if (cfg.dt >= max_pair_step(a, b)) {
    throw DomainError("step too coarse for Nyquist-style guarantee (dt must be < S/2)");
  }
  // Track the faster body minus the slower one so the unwrapped difference increases.
  const Body& fast = a.period < b.period ? a : b;
  const Body& slow = a.period < b.period ? b : a;

  auto wrapped_diff = [&](double t) {
    return wrap_signed_degrees(simulated_longitude(fast, t) - simulated_longitude(slow, t));
  };

  std::vector<double> events;
  const double horizon = cfg.t_end + cfg.refine_tol;
  double t_prev = 0.0;
  double d_prev = wrapped_diff(0.0);
  double unwrapped_prev = 0.0;

  for (std::size_t i = 1; t_prev < horizon; ++i) {
    const double t = std::min(static_cast<double>(i) * cfg.dt, horizon);
    const double d = wrapped_diff(t);
    // |change| < 180 per step because dt < S/2.
    const double unwrapped = unwrapped_prev + wrap_signed_degrees(d - d_prev);
    const double level = 360.0 * (std::floor(unwrapped_prev / 360.0) + 1.0);

    if (unwrapped >= level) {
      auto above = [&](double tm) {
        return unwrapped_prev + wrap_signed_degrees(wrapped_diff(tm) - d_prev) >= level;
      };
      double lo = t_prev;
      double hi = t;
      while (hi - lo > cfg.refine_tol / 4.0) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (above(mid) ? hi : lo) = mid;
      }
      const double event = 0.5 * (lo + hi);
      if (event <= horizon) events.push_back(event);
    }

    t_prev = t;
    d_prev = d;
    unwrapped_prev = unwrapped;
  }
  return events;
}

namespace {

std::pair<std::size_t, std::size_t> fastest_pair(std::span<const Body> bodies) {
  std::pair<std::size_t, std::size_t> best{0, 1};
  double best_rel = -1.0;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      check_units(bodies[i], bodies[j]);
      const double rel = std::abs(degrees_per_unit(bodies[i]) - degrees_per_unit(bodies[j]));
      if (rel == 0.0) {
        throw DomainError("degenerate pair: '" + bodies[i].name + "' and '" + bodies[j].name +
                          "' never separate");
      }
      if (rel > best_rel) {
        best_rel = rel;
        best = {i, j};
      }
    }
  }
  return best;
}

// Skips the reference pair, which is in conjunction at t by construction.
double max_pairwise_distance(std::span<const Body> bodies, std::pair<std::size_t, std::size_t> skip,
                             double t) {
  std::vector<double> lon;
  lon.reserve(bodies.size());
  for (const auto& b : bodies) lon.push_back(simulated_longitude(b, t));
  double worst = 0.0;
  for (std::size_t i = 0; i < lon.size(); ++i) {
    for (std::size_t j = i + 1; j < lon.size(); ++j) {
      if (std::pair{i, j} == skip) continue;
      worst = std::max(worst, circular_distance(lon[i], lon[j]));
    }
  }
  return worst;
}

}  // namespace

std::optional<double> detect_alignment(std::span<const Body> bodies, double angular_tol,
                                       const SimConfig& cfg) {
  if (bodies.size() < 2) throw DomainError("alignment needs at least two bodies");
  if (angular_tol < 0.0) throw DomainError("angular tolerance must be non-negative");
  const auto ref = fastest_pair(bodies);
  for (double t : detect_pair_conjunctions(bodies[ref.first], bodies[ref.second], cfg)) {
    if (max_pairwise_distance(bodies, ref, t) <= angular_tol) return t;
  }
  return std::nullopt;
}

SimConfig default_alignment_config(std::span<const Body> bodies, double t_end, double refine_tol) {
  if (bodies.size() < 2) throw DomainError("alignment needs at least two bodies");
  const auto [i, j] = fastest_pair(bodies);
  double min_period = bodies.front().period.to_double();
  for (const auto& b : bodies) min_period = std::min(min_period, b.period.to_double());
  const double pair_step = 2.0 * max_pair_step(bodies[i], bodies[j]) / 100.0;
  return {std::min(min_period / 100.0, pair_step), t_end, refine_tol};
}

}  // namespace conjunct
