#include "doctest.h"

#include <uhg/constructions.hpp>
#include <uhg/duality.hpp>
#include <uhg/error.hpp>
#include <uhg/generators.hpp>
#include <uhg/metric.hpp>

#include <algorithm>
#include <array>
#include <vector>

using namespace uhg;

namespace {
FieldCtx Q() { return FieldCtx::rationals(); }

Fq rat(const FieldCtx& ctx, const char* text) { return Fq::parse(ctx, text); }
}  // namespace

TEST_CASE("orthocenter and ortholine") {
  FieldCtx q = Q();
  Point a1(q, 1, 2, 4), a2(q, 3, 0, 5), a3(q, 2, 3, 1);
  Point h = orthocenter(a1, a2, a3);
  CHECK(h == Point(q, 890, -329, 653));

  auto [l1, l2, l3] = triangle_lines(a1, a2, a3);
  CHECK(incident(h, join(a1, dual(l1))));
  CHECK(incident(h, join(a2, dual(l2))));
  CHECK(incident(h, join(a3, dual(l3))));

  Line o = ortholine(dual(a1), dual(a2), dual(a3));
  CHECK(o == dual(h));

  CHECK_THROWS_AS(orthocenter(a1, a2, Point(q, -7, 10, 0)), Error);
}

TEST_CASE("circumlines carry one midpoint per side") {
  FieldCtx q = Q();
  Point a1(q, 0, 0, 1), a2(q, 3, 0, 5), a3(q, 12, 9, 25);
  CircumStructure cs = circumcenters(a1, a2, a3);

  REQUIRE(cs.circumlines.size() == 4);
  REQUIRE(cs.circumcenters.size() == 4);
  CHECK(cs.circumlines[0] == Line(q, 3, 1, 1));
  CHECK(cs.circumcenters[0] == Point(q, 3, 1, 1));

  std::vector<Point> mids;
  for (const auto& pr : cs.midpoints) {
    mids.push_back(pr.first);
    mids.push_back(pr.second);
  }
  for (std::size_t k = 0; k < cs.circumlines.size(); ++k) {
    int held = 0;
    for (const Point& m : mids)
      if (incident(m, cs.circumlines[k])) ++held;
    CHECK(held == 3);
    CHECK(cs.circumcenters[k] == dual(cs.circumlines[k]));
    Fq d1 = quadrance(cs.circumcenters[k], a1);
    CHECK(d1 == quadrance(cs.circumcenters[k], a2));
    CHECK(d1 == quadrance(cs.circumcenters[k], a3));
  }
  CHECK(quadrance(cs.circumcenters[0], a1) == rat(q, "10/9"));

  Point c(Fq::parse(q, "1/2"), Fq::zero(q), Fq::one(q));
  CHECK_THROWS_AS(circumcenters(a1, Point(q, 2, 0, 1), c), Error);
}

TEST_CASE("double triangle reflections") {
  FieldCtx q = Q();
  Point a1(q, 0, 0, 1), a2(q, 3, 0, 5), a3(q, 12, 9, 25);
  DoubleTriangle dt = double_triangle(a1, a2, a3);

  // each derived point reflects across a vertex onto the next one
  CHECK(reflect_point(dt.d[1], a1) == dt.d[2]);
  CHECK(reflect_point(dt.d[2], a2) == dt.d[0]);
  CHECK(reflect_point(dt.d[0], a3) == dt.d[1]);

  Point x = double_point(a1, a2, a3);
  Point y = second_double_point(a1, a2, a3);
  CHECK(x != y);
}

TEST_CASE("reciprocal spread sum") {
  FieldCtx q = Q();
  CHECK(reciprocal_sum_residual(Fq(q, 1), Fq(q, -8), Fq(q, -8)).is_zero());
  CHECK_FALSE(reciprocal_sum_residual(Fq(q, 1), Fq(q, -8), Fq(q, -4)).is_zero());
  CHECK_THROWS_AS(reciprocal_sum_residual(Fq(q, 0), Fq(q, -8), Fq(q, -8)), Error);
}

TEST_CASE("null quadrangle spread constants by hand") {
  FieldCtx q = Q();
  std::array<Point, 4> n = {Point(q, 1, 0, 1), Point(q, 0, 1, 1), Point(q, -1, 0, 1),
                            Point(q, 0, -1, 1)};
  for (const Point& p : n) CHECK(is_null(p));

  Fq P = spread(join(n[0], n[1]), join(n[2], n[3]));
  Fq R = spread(join(n[0], n[2]), join(n[1], n[3]));
  Fq T = spread(join(n[0], n[3]), join(n[1], n[2]));
  std::array<Fq, 3> got = {P, R, T};
  std::array<Fq, 3> want = {Fq(q, 1), Fq(q, -8), Fq(q, -8)};
  CHECK(std::is_permutation(got.begin(), got.end(), want.begin()));
  CHECK(R.is_one());
  CHECK(P * R + R * T + P * T == Fq(q, 48));
  CHECK(P * R * T == Fq(q, 64));
  CHECK(reciprocal_sum_residual(P, R, T).is_zero());

  // dual statement on the tangent quadrilateral
  Fq p = quadrance(meet(dual(n[0]), dual(n[1])), meet(dual(n[2]), dual(n[3])));
  Fq r = quadrance(meet(dual(n[0]), dual(n[2])), meet(dual(n[1]), dual(n[3])));
  Fq t = quadrance(meet(dual(n[0]), dual(n[3])), meet(dual(n[1]), dual(n[2])));
  CHECK(p * r + r * t + p * t == Fq(q, 48));
  CHECK(p * r * t == Fq(q, 64));
}

TEST_CASE("circle conic and line intersection") {
  FieldCtx q = Q();
  Point o(q, 0, 0, 1);
  Conic circle = circle_conic(o, rat(q, "-1/3"));
  CHECK(conic_eval(circle, Point(q, 1, 0, 2)).is_zero());

  auto hits = conic_line_points(circle, Line(q, 0, 1, 0));
  CHECK(hits.size() == 2);
  for (const Point& h : hits) CHECK(quadrance(o, h) == rat(q, "-1/3"));

  CHECK(conic_line_points(circle, Line(q, 0, 1, 5)).empty());
  CHECK_THROWS_AS(circle_conic(Point(q, 1, 0, 1), Fq(q, 1)), Error);
}

TEST_CASE("canonical point chain on a frozen instance") {
  FieldCtx q = Q();
  Point x3(q, 2, 0, 1), y3(q, 3, 0, 1), alpha3(q, 0, 1, 1);
  Point b1(q, 1, 3, 4), b2(q, 1, 2, 1);
  CanonicalPoints cp = canonical_points(x3, y3, alpha3, b1, b2);

  CHECK(cp.alpha1 == Point(q, 1, 0, -1));
  CHECK(cp.alpha2 == Point(q, 1, 0, 1));
  CHECK(cp.x1 == Point(q, 1, -1, 0));
  CHECK(cp.y1 == Point(q, 3, -2, 1));
  CHECK(cp.x2 == Point(q, 1, -6, -7));
  CHECK(cp.y2 == Point(q, 1, -9, -10));
  CHECK(cp.b3 == Point(q, 4, 0, 5));
  CHECK(cp.c1 == Point(q, 11, -18, -17));
  CHECK(cp.c2 == Point(q, 3, -1, 1));
  CHECK(cp.c3 == Point(q, 10, -15, -7));
  CHECK(cp.z3 == Point(q, 17, 0, 7));
  CHECK(cp.w3 == Point(q, 7, 0, 3));
  CHECK(cp.z1 == Point(q, 5, -4, 1));
  CHECK(cp.w1 == Point(q, 6, -5, 1));
  CHECK(cp.z2 == Point(q, 2, -15, -17));
  CHECK(cp.w2 == Point(q, 5, -36, -41));

  SUBCASE("the terminal pair ignores the auxiliary choices") {
    CanonicalPoints cp2 = canonical_points(x3, y3, Point(q, 0, -1, 1), Point(q, 2, 1, 1),
                                           Point(q, 1, -2, 1));
    CHECK(cp2.z3 == cp.z3);
    CHECK(cp2.w3 == cp.w3);
  }

  SUBCASE("quadrances satisfy the cubic") {
    Fq qq = quadrance(x3, y3);
    CHECK(qq == rat(q, "-1/24"));
    CHECK(quadrance(cp.z3, cp.w3) == rat(q, "-1/2400"));
    CHECK(quadrance(x3, cp.z3) == rat(q, "-1/80"));
    CHECK(quadrance(x3, cp.w3) == rat(q, "-1/120"));
    CHECK(canonical_cubic_residual(qq, quadrance(x3, cp.z3)).is_zero());
    CHECK(canonical_cubic_residual(qq, quadrance(x3, cp.w3)).is_zero());
    CHECK(quadrance(x3, cp.z3) == quadrance(y3, cp.w3));
    CHECK(quadrance(x3, cp.w3) == quadrance(y3, cp.z3));
    CHECK(qq * qq == Fq(q, 4) * quadrance(cp.z3, cp.w3) * (qq - Fq::one(q)));
  }
}

TEST_CASE("cubic residuals at the curve points") {
  FieldCtx q = Q();
  Fq v = rat(q, "9/8");
  CHECK(canonical_cubic_residual(v, v).is_zero());
  CHECK_FALSE(canonical_cubic_residual(v, rat(q, "5/4")).is_zero());

  Fq u = rat(q, "1/4");
  CHECK(jumping_jack_residual(u, u).is_zero());
  CHECK_FALSE(jumping_jack_residual(u, rat(q, "1/3")).is_zero());
}

TEST_CASE("jumping jack instance") {
  FieldCtx q = Q();
  std::array<Point, 5> a = {Point(q, 1, 0, 1), Point(q, 0, 1, 1), Point(q, -1, 0, 1),
                            Point(q, 0, -1, 1), Point(q, -3, 4, 5)};
  Line L(q, 1, 1, 0);
  JumpingJack jj = jumping_jack(a, L);

  CHECK(jj.g == Point(q, 0, 0, 1));
  CHECK(jj.x == Point(q, 1, 0, -3));
  CHECK(jj.y == Point(q, 1, -1, -2));
  CHECK(jj.z == Point(q, 0, 2, 1));
  CHECK(jj.w == Point(q, 2, -2, -3));
  CHECK(jj.r == rat(q, "-9/16"));
  CHECK(jj.s == rat(q, "4/3"));
  CHECK(jumping_jack_residual(jj.r, jj.s).is_zero());

  CHECK_THROWS_AS(jumping_jack(a, Line(q, 1, 1, 1)), Error);
}

TEST_CASE("parabola points on a frozen instance") {
  FieldCtx q = Q();
  Point f1(q, 3, 8, -1), b1(q, 3, 0, -1);
  Line D1(q, 3, 8, -9);
  ParabolaPoints pp1 = parabola_points(f1, D1, b1);

  std::vector<Point> got = {pp1.points[0], pp1.points[1]};
  CHECK(std::count(got.begin(), got.end(), Point(q, 15, 8, -13)) == 1);
  CHECK(std::count(got.begin(), got.end(), Point(q, 3, -8, 7)) == 1);

  Point f2 = dual(D1);
  Line D2 = dual(f1);
  CHECK(f2 == Point(q, 3, 8, -9));
  for (const Point& a : pp1.points) {
    CHECK(parabola_locus_residual(f1, D1, a).is_zero());
    CHECK(quadrance(a, f1) + quadrance(a, f2) == Fq(q, 1));
  }

  // the two tangents meet at the second base point
  Point b2 = meet(pp1.tangents[0], pp1.tangents[1]);
  CHECK(b2 == Point(q, 1, 0, -3));

  ParabolaPoints pp2 = parabola_points(f2, D2, b2);
  std::vector<Point> got2 = {pp2.points[0], pp2.points[1]};
  CHECK(std::count(got2.begin(), got2.end(), Point(q, 5, 8, -7)) == 1);
  CHECK(std::count(got2.begin(), got2.end(), Point(q, 7, 8, -13)) == 1);
  CHECK(meet(pp2.tangents[0], pp2.tangents[1]) == b1);

  SUBCASE("the perpendicular pairing on this instance is the cross one") {
    CHECK_FALSE(perpendicular(pp1.points[0], pp2.points[0]));
    CHECK(perpendicular(pp1.points[0], pp2.points[1]));
    CHECK(perpendicular(pp1.points[1], pp2.points[0]));
    CHECK_FALSE(perpendicular(pp1.points[1], pp2.points[1]));
  }

  CHECK_THROWS_AS(parabola_points(f1, D1, Point(q, 0, 0, 1)), Error);
}

TEST_CASE("limiting line construction meets the line at null points") {
  FieldCtx q = Q();
  Rng rng(1);
  gen::SideWithMidpoints s = gen::midpoint_side(q, rng);
  Point a = s.b;
  Line L = s.N;
  LimitingLines ll = bolyai_limiting_lines(a, L);

  CHECK(ll.U == Line(q, 433, 219, -279));
  CHECK(ll.V == Line(q, 569, -533, -671));
  CHECK(incident(ll.u, ll.U));
  CHECK(incident(ll.v, ll.V));

  auto nn = null_points_on(L);
  REQUIRE(nn.size() == 2);
  std::vector<Line> joins = {join(a, nn[0]), join(a, nn[1])};
  CHECK(std::count(joins.begin(), joins.end(), ll.U) == 1);
  CHECK(std::count(joins.begin(), joins.end(), ll.V) == 1);
  CHECK(is_null(meet(ll.U, L)));
  CHECK(is_null(meet(ll.V, L)));

  CHECK_THROWS_AS(bolyai_limiting_lines(Point(q, 0, 0, 1), Line(q, 0, 0, 1)), Error);
}
