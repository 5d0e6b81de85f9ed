#include "doctest.h"

#include <uhg/duality.hpp>
#include <uhg/error.hpp>
#include <uhg/metric.hpp>

#include <algorithm>

using namespace uhg;

namespace {
FieldCtx Q() { return FieldCtx::rationals(); }
}  // namespace

TEST_CASE("polarity swaps brackets and preserves incidence") {
  FieldCtx q = Q();
  Point a(q, 1, 2, 3);
  Line A = dual(a);
  CHECK(A.str() == "(1:2:3)");
  CHECK(dual(A) == a);

  Point b(q, 1, 1, 1);
  CHECK(incident(b, A));
  CHECK(incident(a, dual(b)));
  CHECK(perpendicular(a, b));
  CHECK_FALSE(perpendicular(a, Point(q, 1, 0, 0)));
  CHECK(perpendicular(dual(a), dual(b)));

  Line C = join(a, b);
  CHECK(dual(C) == meet(A, dual(b)));
}

TEST_CASE("null points and tangent lines") {
  FieldCtx q = Q();
  CHECK(is_null(Point(q, 1, 0, 1)));
  CHECK(is_null(Point(q, 3, 4, 5)));
  CHECK_FALSE(is_null(Point(q, 0, 0, 1)));
  CHECK(is_null(dual(Point(q, 3, 4, 5))));
  CHECK(tangent_line(Line(q, 3, 4, 5)));
  CHECK_FALSE(tangent_line(Line(q, 1, 1, 1)));

  CHECK(null_point(ExtValue::finite(Fq(q, 1))) == Point(q, 0, 1, 1));
  CHECK(null_point(ExtValue::finite(Fq(q, 0))) == Point(q, 1, 0, 1));
  CHECK(null_point(ExtValue::infinity(q)) == Point(q, -1, 0, 1));
  CHECK(null_point(Fq(q, 2)) == Point(q, -3, 4, 5));

  auto two = null_points_on(Line(q, 1, 1, 1));
  REQUIRE(two.size() == 2);
  CHECK(std::count(two.begin(), two.end(), Point(q, 1, 0, 1)) == 1);
  CHECK(std::count(two.begin(), two.end(), Point(q, 0, 1, 1)) == 1);

  auto one = null_points_on(Line(q, 1, 0, 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Point(q, 1, 0, 1));

  CHECK(null_points_on(Line(q, 0, 0, 1)).empty());
  CHECK(null_points_on(Line(q, 0, 1, 2)).empty());
}

TEST_CASE("interior and exterior classification") {
  FieldCtx q = Q();
  CHECK(interior(Point(q, 0, 0, 1)));
  CHECK(interior(Point(q, 1, 0, 2)));
  CHECK(exterior(Point(q, 2, 0, 1)));
  CHECK(interior(Line(q, 1, 1, 1)));
  CHECK_FALSE(interior(Line(q, 0, 1, 2)));

  FieldCtx f7 = FieldCtx::prime(7);
  CHECK_THROWS_AS(interior(Point(f7, 0, 0, 1)), Error);
}

TEST_CASE("couple constructions") {
  FieldCtx q = Q();
  Point a(q, 2, 1, 2);
  Line L(q, 0, 1, 2);
  Couple c(a, L);

  Line A = altitude_line(c);
  CHECK(A == Line(q, 0, 2, 1));
  CHECK(incident(a, A));
  CHECK(perpendicular(A, L));

  Point f = altitude_point(c);
  CHECK(f == Point(q, 0, 2, 1));
  CHECK(incident(f, L));
  CHECK(perpendicular(f, a));
  CHECK(f == dual(A));

  Line P = parallel_line(c);
  CHECK(P == Line(q, 3, 2, 4));
  CHECK(incident(a, P));
  CHECK(incident(f, P));

  Point b = base_point(c);
  CHECK(b == Point(q, 1, 0, 0));
  CHECK(incident(b, L));
  CHECK(incident(b, A));
  CHECK(base_line(c) == dual(b));

  CHECK_THROWS_AS(Couple(Point(q, 0, 1, 2), Line(q, 0, 1, 2)), Error);
}

TEST_CASE("conjugate points separate a side") {
  FieldCtx q = Q();
  Point a(q, 2, 0, 1), b(q, 0, 0, 1);
  auto [c1, c2] = conjugate_points(Side(a, b));
  CHECK(c1 == Point(q, 1, 0, 0));
  CHECK(c2 == Point(q, 1, 0, 2));
  CHECK(collinear(a, b, c1));
  CHECK(collinear(a, b, c2));
  CHECK(perpendicular(c1, b));
  CHECK(perpendicular(c2, a));

  auto [l1, l2] = conjugate_lines(Vertex(dual(a), dual(b)));
  CHECK(l1 == dual(c1));
  CHECK(l2 == dual(c2));

  CHECK_THROWS_AS(conjugate_points(Side(Point(q, 1, 0, 1), b)), Error);
}

TEST_CASE("midpoints when the reflection square exists") {
  FieldCtx q = Q();
  Point a(q, 0, 0, 1);
  Point b(Fq::parse(q, "3/5"), Fq::zero(q), Fq::one(q));
  auto m = midpoints(Side(a, b));
  REQUIRE(m.has_value());
  CHECK(m->first == Point(q, 1, 0, 3));
  CHECK(m->second == Point(q, 3, 0, 1));
  CHECK(perpendicular(m->first, m->second));
  CHECK(quadrance(a, m->first) == quadrance(m->first, b));
  CHECK(quadrance(a, m->second) == quadrance(m->second, b));

  auto ml = midlines(Side(a, b));
  REQUIRE(ml.has_value());
  CHECK(ml->first == dual(m->first));
  CHECK(ml->second == dual(m->second));

  Point c(Fq::parse(q, "1/2"), Fq::zero(q), Fq::one(q));
  CHECK_FALSE(midpoints(Side(a, c)).has_value());

  auto bl = bilines(Vertex(dual(a), dual(b)));
  REQUIRE(bl.has_value());
  auto bp = bipoints(Vertex(dual(a), dual(b)));
  REQUIRE(bp.has_value());
  CHECK(bp->first == dual(bl->first));
  CHECK(bp->second == dual(bl->second));
}

TEST_CASE("reflections are exact involutions") {
  FieldCtx q = Q();
  Point m(q, 1, 1, 2);
  Point x(q, 5, -1, 4);
  Point y = reflect_point(x, m);
  CHECK(reflect_point(y, m) == x);
  CHECK(quadrance(x, m) == quadrance(m, y));

  Line L(q, 2, -1, 3);
  Line Lr = reflect_line(L, m);
  CHECK(reflect_line(Lr, m) == L);

  CHECK(reflect_point_in_line(x, dual(m)) == y);
  CHECK(reflect_line_in_line(L, dual(m)) == Lr);

  CHECK_THROWS_AS(reflect_point(x, Point(q, 1, 0, 1)), Error);
  CHECK_THROWS_AS(reflect_point_in_line(x, Line(q, 3, 4, 5)), Error);
}

TEST_CASE("secant side with reflection midpoints only") {
  FieldCtx q = Q();
  Point a1(q, 1, 1, 1), a2(q, 1, 1, -1);
  Point e(q, 0, 0, 1), g(q, 1, 1, 0);

  CHECK_FALSE(midpoints(Side(a1, a2)).has_value());
  CHECK(reflect_point(a1, e) == a2);
  CHECK(reflect_point(a1, g) == a2);
  CHECK(perpendicular(e, g));
  CHECK(quadrance(a1, e) == Fq(q, 2));
  CHECK(quadrance(e, a2) == Fq(q, 2));
}
