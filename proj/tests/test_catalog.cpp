#include <gtest/gtest.h>

#include <sstream>

#include "conjunct/catalog.hpp"

using namespace conjunct;

TEST(Catalog, BuiltinPeriodSets) {
  EXPECT_EQ(builtin_catalog("clock").find("second")->period, Ratio::make(1, 60));
  EXPECT_EQ(builtin_catalog("clock").find("hour")->units, TimeUnit::hours);
  EXPECT_EQ(builtin_catalog("coarse").find("mars")->period, Ratio::make(9, 5));
  EXPECT_EQ(builtin_catalog("refined").find("Jupiter")->period, Ratio::make(593, 50));
  EXPECT_EQ(builtin_catalog("refined").find("saturn")->period, Ratio::make(1473, 50));
  EXPECT_EQ(builtin_catalog("alt").find("saturn")->period, Ratio::make(59, 2));
  EXPECT_FALSE(builtin_catalog("refined").find("mars").has_value());
}

TEST(Catalog, UnknownCatalogListsNames) {
  try {
    builtin_catalog("precise");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("clock, coarse, refined, alt"), std::string::npos);
  }
}

TEST(BodyFile, ParsesLinesAndComments) {
  std::istringstream in("# name period units\n\njupiter 11.86 years\nhour 12 h\n  vesta 1325/365 y\n");
  const auto bodies = read_body_file(in);
  ASSERT_EQ(bodies.size(), 3u);
  EXPECT_EQ(bodies[0].period, Ratio::make(593, 50));
  EXPECT_EQ(bodies[1].units, TimeUnit::hours);
  EXPECT_EQ(bodies[2].name, "vesta");
  EXPECT_EQ(bodies[2].period, Ratio::make(265, 73));
}

TEST(BodyFile, ErrorsCarryLineNumbers) {
  auto error_for = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      read_body_file(in);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(error_for("a 1 y\nb 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_for("a x.5 y\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_for("a 1 fortnights\n").find("unknown time unit"), std::string::npos);
  EXPECT_NE(error_for("a 0 y\n").find("positive period"), std::string::npos);
  EXPECT_NE(error_for("a 1 y extra\n").find("line 1"), std::string::npos);
}
