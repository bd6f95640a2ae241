#pragma once

// Brute-force conjunction detection by time-stepping the uniform motion.
//
// Nothing here uses the synodic-period or lcm formulas to produce results;
// each body's longitude is integrated independently and conjunctions are found
// as zero crossings of the unwrapped angular difference, refined by bisection.
// It exists to cross-check the analytic modules.

#include <optional>
#include <span>
#include <vector>

#include "conjunct/kinematics.hpp"

namespace conjunct {

struct SimConfig {
  double dt = 0.01;
  double t_end = 1.0;
  double refine_tol = 1e-9;

  /// Throws DomainError unless 0 < dt < t_end and 0 < refine_tol < dt.
  void validate() const;
};

/// Longitude of `b` at time t in double precision, [0, 360).
double simulated_longitude(const Body& b, double t);

/// Largest step that still guarantees no conjunction is skipped: 360 / |w_a - w_b| / 2.
double max_pair_step(const Body& a, const Body& b);

/// Conjunction times in (0, t_end], each within refine_tol of a true event.
/// Throws DomainError when dt >= S/2 ("step too coarse") or the periods coincide.
std::vector<double> detect_pair_conjunctions(const Body& a, const Body& b, const SimConfig& cfg);

/// Convenience: dt = S/100 for the pair.
SimConfig default_pair_config(const Body& a, const Body& b, double t_end, double refine_tol = 1e-9);

/// Earliest time in (0, t_end] at which every pairwise circular distance is
/// within angular_tol degrees, or nullopt if there is none.
///
/// Candidate instants are the refined conjunctions of the pair with the
/// largest relative speed; `cfg.dt` applies to that pair.
std::optional<double> detect_alignment(std::span<const Body> bodies, double angular_tol,
                                       const SimConfig& cfg);

/// Convenience: dt = (min period)/100, bounded by the reference pair's S/100.
SimConfig default_alignment_config(std::span<const Body> bodies, double t_end,
                                   double refine_tol = 1e-9);

}  // namespace conjunct
