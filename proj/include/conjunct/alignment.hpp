#pragma once

// Simultaneous conjunction of N >= 2 bodies with rational periods.

#include <span>
#include <string>
#include <vector>

#include "conjunct/kinematics.hpp"

namespace conjunct {

struct PairSynodic {
  std::string label;  // "a-b"
  std::size_t first = 0;
  std::size_t second = 0;
  Ratio synodic;
};

struct AlignmentReport {
  std::vector<Body> bodies;
  std::vector<PairSynodic> pairwise;  // every unordered pair, in (i, j) order with i < j
  Ratio period;                       // least common integer multiple of all pairwise synodics
};

/// Folds lcm_ratio over all pairs and cross-checks the result against the
/// chain of adjacent pairs (a spanning set) and against the exact positions
/// at `period`; a mismatch throws std::logic_error.
///
/// Fewer than two bodies, mixed units or a repeated period raise DomainError.
AlignmentReport alignment_period(std::span<const Body> bodies);

}  // namespace conjunct
