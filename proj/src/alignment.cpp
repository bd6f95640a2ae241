#include "conjunct/alignment.hpp"

#include <stdexcept>

namespace conjunct {

AlignmentReport alignment_period(std::span<const Body> bodies) {
  if (bodies.size() < 2) throw DomainError("alignment needs at least two bodies");

  AlignmentReport report;
  report.bodies.assign(bodies.begin(), bodies.end());

  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      report.pairwise.push_back({bodies[i].name + "-" + bodies[j].name, i, j,
                                 synodic_period(bodies[i], bodies[j])});
    }
  }

  Ratio all_pairs = report.pairwise.front().synodic;
  for (const auto& p : report.pairwise) all_pairs = lcm_ratio(all_pairs, p.synodic);

  // Adjacent pairs (0,1), (1,2), ... already span every body.
  Ratio chain = synodic_period(bodies[0], bodies[1]);
  for (std::size_t i = 1; i + 1 < bodies.size(); ++i) {
    chain = lcm_ratio(chain, synodic_period(bodies[i], bodies[i + 1]));
  }
  if (chain != all_pairs) {
    throw std::logic_error("alignment period mismatch: all pairs give " + all_pairs.str() +
                           ", adjacent pairs give " + chain.str());
  }

  const Angle reference = position(bodies[0], all_pairs);
  for (const auto& b : bodies) {
    if (position(b, all_pairs) != reference) {
      throw std::logic_error("bodies not aligned at computed period " + all_pairs.str());
    }
  }

  report.period = std::move(all_pairs);
  return report;
}

}  // namespace conjunct
