#include "doctest.h"

#include <uhg/error.hpp>
#include <uhg/projective.hpp>

using namespace uhg;

namespace {
FieldCtx Q() { return FieldCtx::rationals(); }
}  // namespace

TEST_CASE("homogeneous canonicalization") {
  FieldCtx q = Q();
  CHECK(Point(q, 2, 4, 6).str() == "[1:2:3]");
  CHECK(Point(q, -2, 4, 6).str() == "[1:-2:-3]");
  CHECK(Point(q, 0, 0, -5).str() == "[0:0:1]");
  CHECK(Line(q, 0, -3, 9).str() == "(0:1:-3)");
  CHECK(Point(q, 2, 4, 6) == Point(q, 1, 2, 3));
  CHECK(Point::cmp(Point(q, 0, 0, 1), Point(q, 1, 0, 0)) != 0);
  CHECK_THROWS_AS(Point(q, 0, 0, 0), Error);

  Fq half = Fq::parse(q, "1/2");
  Point p(half, Fq::zero(q), Fq::one(q));
  CHECK(p.str() == "[1:0:2]");

  FieldCtx f7 = FieldCtx::prime(7);
  CHECK(Point(f7, 3, 5, 1).str() == Point(f7, 3 * 5, 5 * 5, 5).str());
  CHECK(Point(f7, 0, 3, 1).x().is_zero());
  CHECK(Point(f7, 0, 3, 1).y().is_one());
}

TEST_CASE("join and meet are dual incidences") {
  FieldCtx q = Q();
  Point a(q, 2, 1, 2), b(q, 0, 0, 1);
  Line l = join(a, b);
  CHECK(incident(a, l));
  CHECK(incident(b, l));
  CHECK(incident(l, a));
  CHECK(incidence_form(a, l).is_zero());
  CHECK_THROWS_AS(join(a, a), Error);

  Line m(q, 1, 1, 1), n(q, 1, 0, 0);
  Point x = meet(m, n);
  CHECK(incident(x, m));
  CHECK(incident(x, n));
  CHECK_THROWS_AS(meet(m, m), Error);

  CHECK(collinear(a, b, point_on(l, ExtValue::finite(Fq(q, 4)))));
  CHECK(concurrent(m, n, join(x, Point(q, 5, 1, 3))));
}

TEST_CASE("span parameterization stays on the line") {
  FieldCtx q = Q();
  Line l(q, 3, -1, 2);
  auto [p0, p1] = span_points(l);
  CHECK(incident(p0, l));
  CHECK(incident(p1, l));
  CHECK(p0 != p1);
  CHECK(point_on(l, ExtValue::infinity(q)) == p1);
  for (long t = -3; t <= 3; ++t) {
    CHECK(incident(point_on(l, ExtValue::finite(Fq(q, t))), l));
  }
}

TEST_CASE("cross ratio of an affine arithmetic progression") {
  FieldCtx q = Q();
  Point p0(q, 0, 0, 1), p1(q, 1, 0, 1), p2(q, 2, 0, 1), p3(q, 3, 0, 1);
  ExtValue v = cross_ratio(p0, p1, p2, p3);
  REQUIRE_FALSE(v.is_infinite());
  CHECK(v.value().str() == "4/3");
  CHECK(v == ExtValue::finite(Fq::parse(q, "4/3")));
  CHECK(v.str() == "4/3");
  CHECK(ExtValue::infinity(q).str() == "inf");
  CHECK(ExtValue::infinity(q) == ExtValue::infinity(q));
  CHECK(ExtValue::infinity(q) != v);
}

TEST_CASE("pappus configuration closes") {
  FieldCtx q = Q();
  std::array<Point, 3> a = {Point(q, 1, 0, 1), Point(q, 2, 0, 1), Point(q, 3, 0, 1)};
  std::array<Point, 3> b = {Point(q, 1, 1, 1), Point(q, 2, 2, 1), Point(q, 4, 4, 1)};
  CHECK(pappus_collinear(a, b));
}

TEST_CASE("desargues axis appears exactly for central perspectivity") {
  FieldCtx q = Q();
  std::array<Point, 3> a = {Point(q, 2, 0, 1), Point(q, 0, 2, 1), Point(q, 2, 2, 1)};
  std::array<Point, 3> b = {Point(q, 5, 1, 2), Point(q, 3, 3, 2), Point(q, 5, 3, 2)};
  CHECK(desargues_collinear(a, b));
  std::array<Point, 3> c = {b[0], b[1], Point(q, 7, 3, 2)};
  CHECK_FALSE(desargues_collinear(a, c));
}
