#include "uhg/constructions.hpp"

#include <algorithm>

namespace uhg {

std::array<Line, 3> triangle_lines(const Point& a1, const Point& a2, const Point& a3) {
  if (collinear(a1, a2, a3)) fail(Err::CollinearPoints, "degenerate triangle");
  return {join(a2, a3), join(a1, a3), join(a1, a2)};
}

namespace {

void check_non_dual(const std::array<Point, 3>& a, const std::array<Line, 3>& l) {
  for (int i = 0; i < 3; ++i)
    if (dual(l[static_cast<std::size_t>(i)]) == a[static_cast<std::size_t>(i)])
      fail(Err::DualTriangle, "vertex is the pole of its opposite line");
}

}  // namespace

Point orthocenter(const Point& a1, const Point& a2, const Point& a3) {
  auto l = triangle_lines(a1, a2, a3);
  check_non_dual({a1, a2, a3}, l);
  Line n1 = join(a1, dual(l[0]));
  Line n2 = join(a2, dual(l[1]));
  Line n3 = join(a3, dual(l[2]));
  Point o = meet(n1, n2);
  if (!incident(o, n3)) fail(Err::Inconsistent, "altitude lines fail to concur");
  return o;
}

Line ortholine(const Line& l1, const Line& l2, const Line& l3) {
  Point m1 = meet(l2, l3), m2 = meet(l1, l3), m3 = meet(l1, l2);
  if (collinear(m1, m2, m3)) fail(Err::CollinearPoints, "degenerate trilateral");
  check_non_dual({m1, m2, m3}, {l1, l2, l3});
  Point p1 = meet(l1, dual(m1));
  Point p2 = meet(l2, dual(m2));
  Point p3 = meet(l3, dual(m3));
  Line o = join(p1, p2);
  if (!incident(p3, o)) fail(Err::Inconsistent, "altitude points fail to align");
  return o;
}

CircumStructure circumcenters(const Point& a1, const Point& a2, const Point& a3) {
  triangle_lines(a1, a2, a3);
  auto need = [](const Side& s, int i) {
    auto m = midpoints(s);
    if (!m)
      fail(Err::MidpointsAbsent, "side " + std::to_string(i) + " has no midpoints in the field");
    return *m;
  };
  CircumStructure out{{need(Side(a2, a3), 1), need(Side(a1, a3), 2), need(Side(a1, a2), 3)},
                      {},
                      {}};
  auto pick = [&out](int side, int which) -> const Point& {
    const auto& pr = out.midpoints[static_cast<std::size_t>(side)];
    return which == 0 ? pr.first : pr.second;
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const Point &p = pick(0, i), &q = pick(1, j), &r = pick(2, k);
        if (!collinear(p, q, r)) continue;
        Line c = join(p, q);
        if (std::find(out.circumlines.begin(), out.circumlines.end(), c) == out.circumlines.end())
          out.circumlines.push_back(c);
      }
  for (const Line& c : out.circumlines) out.circumcenters.push_back(dual(c));
  return out;
}

DoubleTriangle double_triangle(const Point& a1, const Point& a2, const Point& a3) {
  auto l = triangle_lines(a1, a2, a3);
  check_non_dual({a1, a2, a3}, l);
  std::array<Point, 3> a = {a1, a2, a3};
  DoubleTriangle dt{{l[0], l[1], l[2]}, {a1, a2, a3}};
  for (std::size_t i = 0; i < 3; ++i) dt.parallels[i] = parallel_line(Couple(a[i], l[i]));
  for (std::size_t i = 0; i < 3; ++i) {
    const Line& u = dt.parallels[(i + 1) % 3];
    const Line& v = dt.parallels[(i + 2) % 3];
    if (u == v) fail(Err::DegenerateDouble, "coincident parallel lines");
    dt.d[i] = meet(u, v);
  }
  if (collinear(dt.d[0], dt.d[1], dt.d[2]))
    fail(Err::DegenerateDouble, "double triangle collapses");
  return dt;
}

namespace {

Point concurrency_point(const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
  for (std::size_t i = 0; i < 3; ++i)
    if (a[i] == b[i]) fail(Err::DegenerateDouble, "join endpoint coincidence");
  Line j1 = join(a[0], b[0]);
  Line j2 = join(a[1], b[1]);
  if (j1 == j2) fail(Err::DegenerateDouble, "coincident joins");
  Point x = meet(j1, j2);
  if (!incident(x, join(a[2], b[2]))) fail(Err::Inconsistent, "joins fail to concur");
  return x;
}

}  // namespace

Point double_point(const Point& a1, const Point& a2, const Point& a3) {
  DoubleTriangle dt = double_triangle(a1, a2, a3);
  return concurrency_point({a1, a2, a3}, dt.d);
}

Point second_double_point(const Point& a1, const Point& a2, const Point& a3) {
  DoubleTriangle dt = double_triangle(a1, a2, a3);
  DoubleTriangle gt = double_triangle(dt.d[0], dt.d[1], dt.d[2]);
  return concurrency_point({a1, a2, a3}, gt.d);
}

Fq reciprocal_sum_residual(const Fq& P, const Fq& R, const Fq& T) {
  if (P.is_zero() || R.is_zero() || T.is_zero())
    fail(Err::ZeroSpread, "reciprocal sum needs nonzero spreads");
  Fq one = Fq::one(P.ctx());
  return one / P + one / R + one / T - Fq(P.ctx(), 3) / Fq(P.ctx(), 4);
}

Conic circle_conic(const Point& a, const Fq& k) {
  if (is_null(a)) fail(Err::NullCenter, "circle center " + a.str() + " is null");
  Fq lam = (Fq::one(a.ctx()) - k) * form(a, a);
  const Fq &u = a.x(), &v = a.y(), &w = a.z();
  Fq two = Fq(a.ctx(), 2);
  return {u * u - lam, v * v - lam, w * w + lam, two * u * v, -two * u * w, -two * v * w};
}

Fq conic_eval(const Conic& c, const Point& x) {
  return c[0] * x.x() * x.x() + c[1] * x.y() * x.y() + c[2] * x.z() * x.z() +
         c[3] * x.x() * x.y() + c[4] * x.x() * x.z() + c[5] * x.y() * x.z();
}

namespace {

// Polar form: half of conic_eval(p+q) - conic_eval(p) - conic_eval(q).
Fq conic_pair(const Conic& c, const Point& p, const Point& q) {
  Fq two = Fq(p.ctx(), 2);
  return (two * (c[0] * p.x() * q.x() + c[1] * p.y() * q.y() + c[2] * p.z() * q.z()) +
          c[3] * (p.x() * q.y() + p.y() * q.x()) + c[4] * (p.x() * q.z() + p.z() * q.x()) +
          c[5] * (p.y() * q.z() + p.z() * q.y())) /
         two;
}

}  // namespace

std::vector<Point> conic_line_points(const Conic& c, const Line& l) {
  auto [p, q] = span_points(l);
  Fq A = conic_eval(c, q), B = conic_pair(c, p, q), C = conic_eval(c, p);
  auto at = [&p, &q](const Fq& t) {
    return Point(p.x() + t * q.x(), p.y() + t * q.y(), p.z() + t * q.z());
  };
  std::vector<Point> out;
  if (A.is_zero() && B.is_zero() && C.is_zero())
    fail(Err::DegenerateConfiguration, "line lies on the conic");
  if (A.is_zero()) {
    out.push_back(q);
    if (!B.is_zero()) out.push_back(at(-C / (B + B)));
  } else {
    Fq disc = B * B - A * C;
    if (auto s = sqrt_in_field(disc)) {
      out.push_back(at((-B + *s) / A));
      if (!s->is_zero()) out.push_back(at((-B - *s) / A));
    }
  }
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return Point::cmp(a, b) < 0; });
  return out;
}

ParabolaPoints parabola_points(const Point& f1, const Line& D1, const Point& b1) {
  if (!incident(b1, D1)) fail(Err::NotIncident, "base point off the directrix");
  if (is_null(f1)) fail(Err::NullArgument, "null focus");
  if (is_null(D1)) fail(Err::NullArgument, "null directrix");
  if (incident(f1, D1)) fail(Err::DegenerateConfiguration, "focus on the directrix");
  auto ml = midlines(Side(b1, f1));
  if (!ml) fail(Err::MidlinesAbsent, "side from base to focus has no midlines in the field");
  Line alt = altitude_line(Couple(b1, D1));
  return {{meet(ml->first, alt), meet(ml->second, alt)}, {ml->first, ml->second}};
}

Fq parabola_locus_residual(const Point& f1, const Line& D1, const Point& a) {
  return quadrance(a, f1) - quadrance(a, base_point(Couple(a, D1)));
}

LimitingLines bolyai_limiting_lines(const Point& a, const Line& L) {
  if (L.ctx().is_rational()) {
    if (!interior(L)) fail(Err::ExteriorLine, "line " + L.str() + " misses the null circle");
  } else if (null_points_on(L).size() < 2) {
    fail(Err::ExteriorLine, "line " + L.str() + " misses the null circle");
  }
  Couple cpl(a, L);
  Point c = base_point(cpl);
  auto mids = midpoints(Side(a, c));
  if (!mids) fail(Err::MidpointsAbsent, "altitude foot side has no midpoints in the field");
  Line P = parallel_line(cpl);
  Point pole = dual(P);
  for (long tv = 0; tv <= 25; ++tv) {
    ExtValue t = tv == 25 ? ExtValue::infinity(L.ctx()) : ExtValue::finite(Fq(L.ctx(), tv));
    Point b = point_on(L, t);
    if (b == c || is_null(b) || b == pole) continue;
    Point d = reflect_point(b, mids->first);
    Point e = reflect_point(b, mids->second);
    Fq k = quadrance(a, d);
    if (quadrance(a, e) != k) fail(Err::Inconsistent, "reflected points not equidistant");
    Line N = join(b, pole);
    auto pts = conic_line_points(circle_conic(a, k), N);
    if (pts.empty()) fail(Err::NoIntersection, "circle misses the altitude line in the field");
    if (pts.size() == 1) fail(Err::DegenerateConfiguration, "circle tangent to the altitude line");
    LimitingLines out{join(a, pts[0]), join(a, pts[1]), pts[0], pts[1]};
    if (Line::cmp(out.V, out.U) < 0) {
      std::swap(out.U, out.V);
      std::swap(out.u, out.v);
    }
    return out;
  }
  fail(Err::GeneratorExhausted, "no workable base point on " + L.str());
}

CanonicalPoints canonical_points(const Point& x3, const Point& y3, const Point& alpha3,
                                 const Point& b1, const Point& b2) {
  Line s3 = join(x3, y3);
  auto nulls = null_points_on(s3);
  if (nulls.size() < 2) fail(Err::NoNullPointsOnJoin, "join " + s3.str() + " misses the null circle");
  Point a1 = nulls[0], a2 = nulls[1];
  if (!is_null(alpha3) || alpha3 == a1 || alpha3 == a2)
    fail(Err::DegenerateAux, "third null point invalid");
  Line s2 = join(a1, alpha3);
  Line s1 = join(a2, alpha3);
  if (!incident(b1, s1) || b1 == a2 || b1 == alpha3)
    fail(Err::DegenerateAux, "first transfer point invalid");
  if (!incident(b2, s2) || b2 == a1 || b2 == alpha3)
    fail(Err::DegenerateAux, "second transfer point invalid");
  Point x2 = meet(s2, join(y3, b1));
  Point y2 = meet(s2, join(x3, b1));
  Point x1 = meet(s1, join(y3, b2));
  Point y1 = meet(s1, join(x3, b2));
  Point b3 = meet(join(x1, y2), join(x2, y1));
  Point c1 = meet(join(x2, x3), join(y2, y3));
  Point c2 = meet(join(x1, x3), join(y1, y3));
  Point c3 = meet(join(x1, x2), join(y1, y2));
  Line cb1 = join(c1, b1);
  Line cb2 = join(c2, b2);
  Line cb3 = join(c3, b3);
  Point z3 = meet(cb1, s3);
  Point w2 = meet(cb1, s2);
  Point z1 = meet(cb2, s1);
  Point w3 = meet(cb2, s3);
  Point z2 = meet(cb3, s2);
  Point w1 = meet(cb3, s1);
  return {a1, a2, x1, y1, x2, y2, b3, c1, c2, c3, z1, z2, z3, w1, w2, w3};
}

Fq canonical_cubic_residual(const Fq& q, const Fq& r) {
  Fq four = Fq(q.ctx(), 4), eight = Fq(q.ctx(), 8), two = Fq(q.ctx(), 2);
  Fq lhs = q - four * r;
  return lhs * lhs - eight * q * r * (two * r - q);
}

JumpingJack jumping_jack(const std::array<Point, 5>& alpha, const Line& L) {
  for (const Point& p : alpha)
    if (!is_null(p)) fail(Err::DegenerateConfiguration, "quadrangle point " + p.str() + " not null");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (alpha[i] == alpha[j]) fail(Err::DegenerateConfiguration, "repeated null point");
  Line l13 = join(alpha[0], alpha[2]);
  Line l24 = join(alpha[1], alpha[3]);
  Point g = meet(l13, l24);
  if (!incident(g, L)) fail(Err::NotIncident, "line misses the diagonal point");
  Line l45 = join(alpha[3], alpha[4]);
  Line l35 = join(alpha[2], alpha[4]);
  if (L == l45 || L == l35 || L == l13 || L == l24)
    fail(Err::DegenerateConfiguration, "line collapses onto a quadrangle join");
  JumpingJack jj{g, meet(l13, l45), meet(L, l45), meet(l24, l35), meet(L, l35),
                 Fq::zero(L.ctx()), Fq::zero(L.ctx())};
  if (jj.x == jj.y || jj.z == jj.w)
    fail(Err::DegenerateConfiguration, "coincident measured points");
  jj.r = quadrance(jj.x, jj.y);
  jj.s = quadrance(jj.z, jj.w);
  return jj;
}

Fq jumping_jack_residual(const Fq& r, const Fq& s) {
  Fq ctx16 = Fq(r.ctx(), 16), three = Fq(r.ctx(), 3), four = Fq(r.ctx(), 4);
  return ctx16 * r * s * (three - four * (s + r)) - Fq::one(r.ctx());
}

}  // namespace uhg
