#include <gtest/gtest.h>

#include <vector>

#include "conjunct/alignment.hpp"
#include "conjunct/catalog.hpp"

using namespace conjunct;

namespace {

std::vector<Body> from(const char* catalog, std::initializer_list<const char*> names) {
  std::vector<Body> out;
  for (const char* n : names) out.push_back(*builtin_catalog(catalog).find(n));
  return out;
}

// Smallest k >= 1 with all bodies at the same exact longitude at k * step,
// searched up to `limit` multiples. Uses positions only.
std::optional<Ratio> first_common_multiple(const std::vector<Body>& bodies, const Ratio& step,
                                           int limit) {
  for (int k = 1; k <= limit; ++k) {
    const Ratio t = step * Ratio(k);
    const Angle ref = position(bodies[0], t);
    bool aligned = true;
    for (const auto& b : bodies) aligned = aligned && position(b, t) == ref;
    if (aligned) return t;
  }
  return std::nullopt;
}

}  // namespace

TEST(Alignment, ClockHands) {
  const auto hands = from("clock", {"second", "minute", "hour"});
  const AlignmentReport r = alignment_period(hands);
  EXPECT_EQ(r.period, Ratio(12));
  ASSERT_EQ(r.pairwise.size(), 3u);
  EXPECT_EQ(r.pairwise[0].label, "second-minute");
  EXPECT_EQ(r.pairwise[0].synodic, Ratio::make(1, 59));
  EXPECT_EQ(r.pairwise[1].synodic, Ratio::make(12, 719));
  EXPECT_EQ(r.pairwise[2].synodic, Ratio::make(12, 11));
}

TEST(Alignment, CoarsePlanets) {
  const AlignmentReport r = alignment_period(from("coarse", {"mars", "jupiter", "saturn"}));
  EXPECT_EQ(r.period, Ratio(180));
  EXPECT_EQ(r.pairwise[0].synodic, Ratio::make(36, 17));
  EXPECT_EQ(r.pairwise[1].synodic, Ratio::make(90, 47));
  EXPECT_EQ(r.pairwise[2].synodic, Ratio(20));
}

TEST(Alignment, AlternatePlanetsAreSensitive) {
  const AlignmentReport r = alignment_period(from("alt", {"mars", "jupiter", "saturn"}));
  EXPECT_EQ(r.period, Ratio(531));
  EXPECT_EQ(r.pairwise[2].synodic, Ratio::make(59, 3));
  EXPECT_EQ(r.pairwise[0].synodic, Ratio::make(531, 250));
}

TEST(Alignment, TwoBodiesReduceToSynodic) {
  const auto pair = from("coarse", {"jupiter", "saturn"});
  EXPECT_EQ(alignment_period(pair).period, synodic_period(pair[0], pair[1]));
}

TEST(Alignment, AnyTwoPairsGiveTheSameLcm) {
  for (const char* cat : {"coarse", "alt"}) {
    const AlignmentReport r = alignment_period(from(cat, {"mars", "jupiter", "saturn"}));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        EXPECT_EQ(lcm_ratio(r.pairwise[i].synodic, r.pairwise[j].synodic), r.period) << cat;
      }
    }
  }
}

TEST(Alignment, Errors) {
  EXPECT_THROW(alignment_period(from("coarse", {"jupiter"})), DomainError);
  std::vector<Body> dup = from("coarse", {"mars", "jupiter"});
  dup.push_back(Body::make("jupiter2", Ratio(12), TimeUnit::years));
  EXPECT_THROW(alignment_period(dup), DomainError);
  std::vector<Body> mixed = {*builtin_catalog("clock").find("hour"), *builtin_catalog("coarse").find("mars")};
  EXPECT_THROW(alignment_period(mixed), DomainError);
}

TEST(AlignmentProperty, PeriodIsTheFirstAlignedMultiple) {
  for (const char* cat : {"clock", "coarse", "alt"}) {
    std::vector<Body> bodies;
    for (const auto& b : builtin_catalog(cat).bodies) {
      if (b.name != "earth") bodies.push_back(b);
    }
    const AlignmentReport r = alignment_period(bodies);
    for (const auto& p : r.pairwise) EXPECT_TRUE((r.period / p.synodic).is_integer());

    const Ratio& step = r.pairwise.front().synodic;
    const Ratio multiples = r.period / step;
    ASSERT_TRUE(multiples.is_integer());
    const auto found = first_common_multiple(bodies, step, multiples.num().convert_to<int>());
    ASSERT_TRUE(found.has_value()) << cat;
    EXPECT_EQ(*found, r.period) << cat;
  }
}

TEST(AlignmentProperty, FourBodies) {
  const std::vector<Body> bodies = {Body::make("a", Ratio(2), TimeUnit::years),
                                    Body::make("b", Ratio(3), TimeUnit::years),
                                    Body::make("c", Ratio(4), TimeUnit::years),
                                    Body::make("d", Ratio(6), TimeUnit::years)};
  const AlignmentReport r = alignment_period(bodies);
  EXPECT_EQ(r.pairwise.size(), 6u);
  // Every body is back at 0 after 12 years, and earlier common multiples of
  // the a-b synodic (6) fail for c or d.
  EXPECT_EQ(r.period, Ratio(12));
  EXPECT_EQ(first_common_multiple(bodies, r.pairwise.front().synodic, 2), Ratio(12));
}
