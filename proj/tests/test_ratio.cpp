#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <random>

#include "conjunct/ratio.hpp"

using conjunct::BigInt;
using conjunct::DomainError;
using conjunct::ParseError;
using conjunct::Ratio;

namespace {

// Least positive k*p that is an integer multiple of q, found by walking the
// multiples of p. Plain 64-bit integers; does not use the lcm formula.
Ratio brute_force_lcm(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  // k*(a/b) / (c/d) = k*a*d / (b*c); k = b*c always works.
  for (std::int64_t k = 1; k <= b * c; ++k) {
    if ((k * a * d) % (b * c) == 0) return Ratio(BigInt(k * a), BigInt(b));
  }
  ADD_FAILURE() << "no multiple found";
  return Ratio(0);
}

bool is_canonical(const Ratio& r) {
  if (r.den() <= 0) return false;
  if (r.is_zero()) return r.den() == 1;
  BigInt n = r.num() < 0 ? BigInt(-r.num()) : r.num();
  return boost::multiprecision::gcd(n, r.den()) == 1;
}

}  // namespace

TEST(Ratio, MakeReducesToLowestTerms) {
  Ratio r = Ratio::make(4, 6);
  EXPECT_EQ(r.num(), 2);
  EXPECT_EQ(r.den(), 3);
}

TEST(Ratio, MakeMovesSignToNumerator) {
  Ratio r = Ratio::make(3, -6);
  EXPECT_EQ(r.num(), -1);
  EXPECT_EQ(r.den(), 2);
}

TEST(Ratio, ZeroIsCanonical) {
  Ratio r = Ratio::make(0, 7);
  EXPECT_EQ(r.num(), 0);
  EXPECT_EQ(r.den(), 1);
  EXPECT_EQ(Ratio(), r);
}

TEST(Ratio, ZeroDenominatorThrows) {
  try {
    Ratio::make(1, 0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "zero denominator");
  }
}

TEST(Ratio, DivisionByZeroThrows) {
  EXPECT_THROW(Ratio(1) / Ratio(0), DomainError);
}

TEST(Ratio, GreatConjunctionArithmetic) {
  // 12 * 30 / (30 - 12) = 20
  EXPECT_EQ(Ratio(12) * Ratio(30) / (Ratio(30) - Ratio(12)), Ratio(20));
}

TEST(Ratio, SecondMinuteArithmetic) {
  const Ratio sixtieth = Ratio::make(1, 60);
  EXPECT_EQ(sixtieth / (Ratio(1) - sixtieth), Ratio::make(1, 59));
}

TEST(Ratio, MultiplicativeIdentity) {
  const Ratio a = Ratio::make(-7, 9);
  EXPECT_EQ(a * Ratio(1), a);
}

TEST(Ratio, ParseFormats) {
  EXPECT_EQ(Ratio::parse("29.46"), Ratio::make(1473, 50));
  EXPECT_EQ(Ratio::parse("1.8"), Ratio::make(9, 5));
  EXPECT_EQ(Ratio::parse("-0.5"), Ratio::make(-1, 2));
  EXPECT_EQ(Ratio::parse(".25"), Ratio::make(1, 4));
  EXPECT_EQ(Ratio::parse("012.50"), Ratio::make(25, 2));
  EXPECT_EQ(Ratio::parse("010/08"), Ratio::make(5, 4));
  EXPECT_EQ(Ratio::parse("12"), Ratio(12));
  EXPECT_EQ(Ratio::parse("12/11"), Ratio::make(12, 11));
  EXPECT_EQ(Ratio::parse(" 6/-4 "), Ratio::make(-3, 2));
}

TEST(Ratio, ParseRejectsMalformed) {
  for (const char* bad : {"", "abc", "1.2.3", "1/", "/2", "1/0.5", "1e3", ".", "--1", "3/x"}) {
    EXPECT_THROW(Ratio::parse(bad), ParseError) << bad;
  }
  try {
    Ratio::parse("12x");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'12x'"), std::string::npos);
  }
  EXPECT_THROW(Ratio::parse("1/0"), DomainError);
}

TEST(Ratio, StrOmitsUnitDenominator) {
  EXPECT_EQ(Ratio(20).str(), "20");
  EXPECT_EQ(Ratio::make(36, 17).str(), "36/17");
  EXPECT_EQ(Ratio::make(-1, 59).str(), "-1/59");
}

TEST(Ratio, ToDoubleIsCorrectlyRoundedForHugeValues) {
  BigInt big = 1;
  for (int i = 0; i < 400; ++i) big *= 10;
  EXPECT_DOUBLE_EQ(Ratio(big + 1, big * 3).to_double(), 1.0 / 3.0);
}

TEST(Ratio, FloorAndFloorMod) {
  EXPECT_EQ(conjunct::floor(Ratio::make(7, 2)), 3);
  EXPECT_EQ(conjunct::floor(Ratio::make(-7, 2)), -4);
  EXPECT_EQ(conjunct::floor(Ratio(-3)), -3);
  EXPECT_EQ(conjunct::floor_mod(Ratio(720), Ratio(360)), Ratio(0));
  EXPECT_EQ(conjunct::floor_mod(Ratio(-30), Ratio(360)), Ratio(330));
  EXPECT_EQ(conjunct::floor_mod(Ratio::make(4320, 11), Ratio(360)), Ratio::make(360, 11));
  EXPECT_THROW(conjunct::floor_mod(Ratio(1), Ratio(0)), DomainError);
}

TEST(IntegerLcmGcd, PublishedValues) {
  EXPECT_EQ(conjunct::lcm_int(12, 1), 12);
  EXPECT_EQ(conjunct::gcd_int(11, 59), 1);
  // 36 = 2^2 3^2, 90 = 2 3^2 5 -> 2^2 3^2 5
  EXPECT_EQ(conjunct::lcm_int(36, 90), 180);
}

TEST(IntegerLcmGcd, RejectNonPositive) {
  EXPECT_THROW(conjunct::lcm_int(0, 3), DomainError);
  EXPECT_THROW(conjunct::gcd_int(4, -2), DomainError);
}

TEST(LcmRatio, PublishedValues) {
  EXPECT_EQ(conjunct::lcm_ratio(Ratio::make(12, 11), Ratio::make(1, 59)), Ratio(12));
  EXPECT_EQ(conjunct::lcm_ratio(Ratio::make(36, 17), Ratio::make(90, 47)), Ratio(180));
  EXPECT_EQ(conjunct::lcm_ratio(Ratio::make(59, 3), Ratio::make(531, 250)), Ratio(531));
}

TEST(LcmRatio, Idempotent) {
  const Ratio a = Ratio::make(22, 7);
  EXPECT_EQ(conjunct::lcm_ratio(a, a), a);
}

TEST(LcmRatio, NonCanonicalInputIsReducedFirst) {
  // 4/6 is stored as 2/3; applying the formula to 4/6 and 1/2 directly would give 4/2 = 2.
  EXPECT_EQ(conjunct::lcm_ratio(Ratio::make(4, 6), Ratio::make(1, 2)), Ratio(2));
  EXPECT_EQ(conjunct::lcm_ratio(Ratio::make(4, 6), Ratio::make(1, 3)), Ratio::make(2, 3));
}

TEST(LcmRatio, RejectsNonPositive) {
  EXPECT_THROW(conjunct::lcm_ratio(Ratio(0), Ratio(1)), DomainError);
  EXPECT_THROW(conjunct::lcm_ratio(Ratio(2), Ratio::make(-1, 3)), DomainError);
}

TEST(LcmRatio, MatchesBruteForceUpTo12) {
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t c = 1; c <= 12; ++c) {
        for (std::int64_t d = 1; d <= 12; ++d) {
          if (std::gcd(c, d) != 1) continue;
          const Ratio p = Ratio::make(a, b);
          const Ratio q = Ratio::make(c, d);
          const Ratio l = conjunct::lcm_ratio(p, q);
          ASSERT_EQ(l, brute_force_lcm(a, b, c, d)) << p << " " << q;
          ASSERT_TRUE((l / p).is_integer());
          ASSERT_TRUE((l / q).is_integer());
        }
      }
    }
  }
}

TEST(LcmRatio, ChainedLcmDoesNotOverflow) {
  // lcm(1..60) already exceeds 64 bits.
  Ratio acc(1);
  for (int n = 2; n <= 60; ++n) acc = conjunct::lcm_ratio(acc, Ratio(n));
  EXPECT_EQ(acc.str(), "9690712164777231700912800");
  for (int n = 61; n <= 100; ++n) acc = conjunct::lcm_ratio(acc, Ratio(n));
  EXPECT_GT(acc.num(), BigInt(std::numeric_limits<std::uint64_t>::max()));
  for (int n = 2; n <= 100; ++n) EXPECT_TRUE((acc / Ratio(n)).is_integer());
}

TEST(RatioProperty, FieldLawsAndCanonicalForm) {
  std::mt19937_64 rng(20201221);
  std::uniform_int_distribution<int> num(-200, 200);
  std::uniform_int_distribution<int> den(1, 200);
  auto draw = [&] { return Ratio::make(num(rng), den(rng)); };
  for (int i = 0; i < 2000; ++i) {
    const Ratio a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE(is_canonical(a + b));
    EXPECT_TRUE(is_canonical(a - b));
    EXPECT_TRUE(is_canonical(a * b));
    if (!b.is_zero()) {
      EXPECT_TRUE(is_canonical(a / b));
      EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(RatioProperty, ParseOfStrRoundTrips) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long long> den(1, 1'000'000);
  for (int i = 0; i < 500; ++i) {
    const Ratio r = Ratio::make(num(rng), den(rng));
    EXPECT_EQ(Ratio::parse(r.str()), r);
  }
}

TEST(RatioOrdering, CrossMultiplicationOrder) {
  EXPECT_LT(Ratio::make(1, 3), Ratio::make(1, 2));
  EXPECT_LT(Ratio::make(-1, 2), Ratio::make(-1, 3));
  EXPECT_GT(Ratio::make(59, 2), Ratio::make(59, 5));
  EXPECT_EQ(Ratio::make(2, 4) <=> Ratio::make(1, 2), std::strong_ordering::equal);
}
