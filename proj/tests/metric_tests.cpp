#include "doctest.h"

#include <uhg/duality.hpp>
#include <uhg/error.hpp>
#include <uhg/metric.hpp>

using namespace uhg;

namespace {
FieldCtx Q() { return FieldCtx::rationals(); }

Fq rat(const FieldCtx& ctx, const char* text) { return Fq::parse(ctx, text); }
}  // namespace

TEST_CASE("quadrance signs across the null circle") {
  FieldCtx q = Q();
  Point o(q, 0, 0, 1);
  CHECK(quadrance(o, Point(q, 1, 0, 2)) == rat(q, "-1/3"));
  CHECK(quadrance(o, Point(q, 2, 0, 1)) == rat(q, "4/3"));
  CHECK(quadrance(Point(q, 2, 0, 1), Point(q, -2, 0, 1)) == rat(q, "-16/9"));
  CHECK(quadrance(Point(q, 2, 0, 1), Point(q, 0, 2, 1)) == rat(q, "8/9"));
  CHECK(quadrance(o, o).is_zero());

  // non-null points joined by a tangent line still give quadrance zero
  Point u(q, 1, 1, 1), v(q, 1, -1, 1);
  CHECK(is_null(join(u, v)));
  CHECK(quadrance(u, v).is_zero());

  CHECK_THROWS_AS(quadrance(o, Point(q, 1, 0, 1)), Error);
}

TEST_CASE("spread of perpendicular lines is one") {
  FieldCtx q = Q();
  CHECK(spread(Line(q, 1, 0, 0), Line(q, 0, 1, 0)).is_one());
  CHECK(spread(Line(q, 1, 1, 1), Line(q, 1, 1, 1)).is_zero());
  CHECK_THROWS_AS(spread(Line(q, 3, 4, 5), Line(q, 1, 0, 0)), Error);

  // spread equals the quadrance of the dual points
  Line l(q, 2, -1, 3), m(q, 1, 4, 1);
  CHECK(spread(l, m) == quadrance(dual(l), dual(m)));
}

TEST_CASE("cross-ratio forms agree with the closed forms") {
  FieldCtx q = Q();
  Point a(q, 0, 0, 1), b(q, 1, 0, 2), c(q, 2, 3, 1), d(q, 5, -1, 4);
  CHECK(quadrance_cr(a, b) == quadrance(a, b));
  CHECK(quadrance_cr(a, c) == quadrance(a, c));
  CHECK(quadrance_cr(c, d) == quadrance(c, d));

  Line l(q, 2, -1, 3), m(q, 1, 4, 1), n(q, 1, 1, 1);
  CHECK(spread_cr(l, m) == spread(l, m));
  CHECK(spread_cr(m, n) == spread(m, n));
}

TEST_CASE("right triangle metrics and laws") {
  FieldCtx q = Q();
  // right angle sits at the third point
  Point a1(q, 2, 0, 1), a2(q, 0, 2, 1), a3(q, 0, 0, 1);
  TriangleMetrics m = triangle_metrics(a1, a2, a3);

  CHECK(m.q[0] == rat(q, "4/3"));
  CHECK(m.q[1] == rat(q, "4/3"));
  CHECK(m.q[2] == rat(q, "8/9"));
  CHECK(m.S[2].is_one());
  CHECK(m.S[0] == rat(q, "3/2"));
  CHECK(m.S[1] == rat(q, "3/2"));
  CHECK(m.quadrea == rat(q, "16/9"));
  CHECK(m.quadrea == quadrea(a1, a2, a3));

  CHECK(law_residual(Law::Pythagoras, m).is_zero());
  CHECK(law_residual(Law::SpreadLaw, m).is_zero());
  CHECK(law_residual(Law::CrossLaw, m).is_zero());
  CHECK(law_residual(Law::CrossDual, m).is_zero());
  CHECK_THROWS_AS(law_residual(Law::TripleQuad, m), Error);
  CHECK_THROWS_AS(law_residual(Law::TripleSpread, m), Error);

  auto [t1, t2] = thales_residuals(m);
  CHECK(t1.is_zero());
  CHECK(t2.is_zero());

  CHECK_THROWS_AS(triangle_metrics(a1, a2, Point(q, 1, 1, 1)), Error);
  CHECK_THROWS_AS(triangle_metrics(a1, Point(q, 3, 0, 1), a3), Error);

  SUBCASE("dual law needs a perpendicular point pair") {
    CHECK_THROWS_AS(law_residual(Law::PythagorasDual, m), Error);
    TriangleMetrics md = triangle_metrics(a1, Point(q, 0, 1, 0), a3);
    CHECK(md.q[2].is_one());
    CHECK(law_residual(Law::PythagorasDual, md).is_zero());
  }
}

TEST_CASE("triple relation vanishes for collinear quadrances") {
  FieldCtx q = Q();
  Point a(q, 0, 0, 1), b(q, 1, 0, 3), c(q, 3, 0, 1);
  Fq q1 = quadrance(a, b), q2 = quadrance(a, c), q3 = quadrance(b, c);
  CHECK(q1 == rat(q, "-1/8"));
  CHECK(q2 == rat(q, "9/8"));
  CHECK(q3.is_one());
  CHECK(triple_relation_residual(q1, q2, q3).is_zero());
  CHECK_FALSE(triple_relation_residual(q1, q2, rat(q, "1/2")).is_zero());
}

TEST_CASE("right parallax pair inverts") {
  FieldCtx q = Q();
  Fq S = rat(q, "2/3");
  Fq qq = right_parallax(S);
  CHECK(qq == rat(q, "-1/2"));
  CHECK(right_parallax_spread(qq) == S);
  CHECK_THROWS_AS(right_parallax(Fq::zero(q)), Error);
}

TEST_CASE("napier style solving from two measurements") {
  FieldCtx q = Q();
  Fq half = rat(q, "1/2");

  RightTriangle rt = napier_solve(NapierKnown::q1q2, half, half);
  CHECK(rt.q1 == half);
  CHECK(rt.q2 == half);
  CHECK(rt.q3 == rat(q, "3/4"));
  CHECK(rt.S1 == rat(q, "2/3"));
  CHECK(rt.S2 == rat(q, "2/3"));

  RightTriangle rs = napier_solve(NapierKnown::S1S2, rat(q, "1/3"), half);
  CHECK(rs.q1 == rat(q, "-1/3"));
  CHECK(rs.q2 == rat(q, "-1/2"));
  CHECK(rs.q3 == Fq(q, -1));

  CHECK_THROWS_AS(napier_solve(NapierKnown::q1q3, Fq(q, 1), half), Error);
}
