#include "doctest.h"

#include <uhg/census.hpp>
#include <uhg/error.hpp>

#include <string>

using namespace uhg;

TEST_CASE("null point count is p plus one") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    CensusReport r = census(p, false);
    INFO("p = ", p);
    CHECK(r.p == p);
    CHECK(r.total_points == p * p + p + 1);
    CHECK(r.null_points == p + 1);
    CHECK(r.null_lines == p + 1);
    CHECK(r.form_square + r.form_nonsquare + r.null_points == r.total_points);
  }
}

TEST_CASE("exhaustive counts over the seven element field") {
  CensusReport r = census(7, true);
  CHECK(r.total_points == 57);
  CHECK(r.null_points == 8);
  CHECK(r.null_lines == 8);

  REQUIRE_FALSE(r.circles.empty());
  // circle layers around any center partition the non-null points
  long by_center = 0;
  for (const CircleCount& c : r.circles) {
    if (c.center == r.circles[0].center) by_center += c.points;
  }
  CHECK(by_center == r.total_points - r.null_points);

  std::string text = r.str();
  CHECK(text.find("field fp:7") != std::string::npos);
  CHECK(text.find("projective_points 57") != std::string::npos);
  CHECK(text.find("null_points 8") != std::string::npos);
  CHECK(text.find("circle center=") != std::string::npos);
}

TEST_CASE("census needs an odd prime") {
  CHECK_THROWS_AS(census(2, false), Error);
  CHECK_THROWS_AS(census(9, false), Error);
  CHECK_THROWS_AS(census(1, false), Error);
}

TEST_CASE("total for p equal five") {
  CHECK(census(5, false).total_points == 31);
}
