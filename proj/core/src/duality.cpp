#include "uhg/duality.hpp"

#include <algorithm>

namespace uhg {

Line dual(const Point& p) { return Line(p.x(), p.y(), p.z()); }
Point dual(const Line& l) { return Point(l.a(), l.b(), l.c()); }

bool is_null(const Point& p) { return form(p, p).is_zero(); }
bool is_null(const Line& l) { return form(l, l).is_zero(); }

bool perpendicular(const Point& u, const Point& v) { return form(u, v).is_zero(); }
bool perpendicular(const Line& u, const Line& v) { return form(u, v).is_zero(); }

namespace {

int form_sign(const Fq& f) {
  if (!f.ctx().is_rational())
    fail(Err::RationalOnly, "interior/exterior taxonomy needs the rational context");
  return sgn(f.rep());
}

}  // namespace

bool interior(const Point& p) { return form_sign(form(p, p)) < 0; }
bool exterior(const Point& p) { return form_sign(form(p, p)) > 0; }
bool interior(const Line& l) { return form_sign(form(l, l)) > 0; }
bool exterior(const Line& l) { return form_sign(form(l, l)) < 0; }

Side::Side(const Point& a, const Point& b) : a_(a), b_(b) {
  if (a == b) fail(Err::IdenticalArguments, "side needs distinct points");
  if (Point::cmp(b_, a_) < 0) std::swap(a_, b_);
}

Line Side::join() const { return uhg::join(a_, b_); }

Vertex::Vertex(const Line& a, const Line& b) : a_(a), b_(b) {
  if (a == b) fail(Err::IdenticalArguments, "vertex needs distinct lines");
  if (Line::cmp(b_, a_) < 0) std::swap(a_, b_);
}

Point Vertex::meet() const { return uhg::meet(a_, b_); }

Couple::Couple(const Point& a, const Line& l) : a_(a), l_(l) {
  if (dual(l) == a) fail(Err::DualCouple, "couple " + a.str() + " " + l.str() + " is dual");
}

bool nil_side(const Side& s) { return is_null(s.first()) || is_null(s.second()); }
bool null_side(const Side& s) { return is_null(s.join()); }
bool nil_vertex(const Vertex& v) { return is_null(v.first()) || is_null(v.second()); }
bool null_vertex(const Vertex& v) { return is_null(v.meet()); }

Line altitude_line(const Couple& c) { return join(c.point(), dual(c.line())); }
Point altitude_point(const Couple& c) { return meet(c.line(), dual(c.point())); }

namespace {

void check_parallel_defined(const Couple& c) {
  if (is_null(c.point()) && incident(c.point(), c.line()))
    fail(Err::DegenerateCouple, "parallel undefined: null point on its own line");
}

}  // namespace

Line parallel_line(const Couple& c) {
  check_parallel_defined(c);
  return join(c.point(), meet(dual(c.point()), c.line()));
}

Point parallel_point(const Couple& c) {
  check_parallel_defined(c);
  return meet(dual(c.point()), join(c.point(), dual(c.line())));
}

Point base_point(const Couple& c) {
  if (incident(c.point(), c.line()) && tangent_line(c.line()))
    fail(Err::DegenerateCouple, "base undefined: point on a tangent line");
  return meet(altitude_line(c), c.line());
}

Line base_line(const Couple& c) {
  if (incident(c.point(), c.line()) && tangent_line(c.line()))
    fail(Err::DegenerateCouple, "base undefined: point on a tangent line");
  return join(altitude_point(c), dual(c.line()));
}

std::pair<Point, Point> conjugate_points(const Side& s) {
  if (nil_side(s) || null_side(s)) fail(Err::NilNullSide, "conjugates need a non-nil, non-null side");
  Line j = s.join();
  return {meet(j, dual(s.first())), meet(j, dual(s.second()))};
}

std::pair<Line, Line> conjugate_lines(const Vertex& v) {
  if (nil_vertex(v) || null_vertex(v))
    fail(Err::DegenerateVertex, "conjugates need a non-nil, non-null vertex");
  Point m = v.meet();
  return {join(m, dual(v.first())), join(m, dual(v.second()))};
}

Point reflect_point(const Point& x, const Point& mirror) {
  if (is_null(mirror)) fail(Err::NullMirror, "reflection mirror " + mirror.str() + " is null");
  Fq two = Fq(x.ctx(), 2);
  Fq s = two * form(x, mirror);
  Fq n = form(mirror, mirror);
  return Point(s * mirror.x() - n * x.x(), s * mirror.y() - n * x.y(), s * mirror.z() - n * x.z());
}

Line reflect_line(const Line& l, const Point& mirror) {
  auto [u, v] = span_points(l);
  return join(reflect_point(u, mirror), reflect_point(v, mirror));
}

Point reflect_point_in_line(const Point& x, const Line& mirror) {
  return dual(reflect_line(dual(x), dual(mirror)));
}

Line reflect_line_in_line(const Line& l, const Line& mirror) {
  return dual(reflect_point(dual(l), dual(mirror)));
}

Point null_point(const Fq& t) {
  Fq one = Fq::one(t.ctx());
  return Point(one - t * t, t + t, one + t * t);
}

Point null_point(const ExtValue& t) {
  if (t.is_infinite()) {
    Fq one = Fq::one(t.ctx());
    return Point(-one, Fq::zero(t.ctx()), one);
  }
  return null_point(t.value());
}

std::vector<Point> null_points_on(const Line& l) {
  auto [p, q] = span_points(l);
  Fq A = form(q, q), B = form(p, q), C = form(p, p);
  auto at = [&p, &q](const Fq& t) {
    return Point(p.x() + t * q.x(), p.y() + t * q.y(), p.z() + t * q.z());
  };
  std::vector<Point> out;
  if (A.is_zero()) {
    out.push_back(q);
    if (!B.is_zero())
      out.push_back(at(-C / (B + B)));
    else if (C.is_zero())
      fail(Err::Inconsistent, "totally null line " + l.str());
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

bool tangent_line(const Line& l) { return is_null(dual(l)); }

std::optional<std::pair<Point, Point>> midpoints(const Side& s) {
  if (nil_side(s)) fail(Err::DegenerateSide, "midpoints need non-null members");
  Line j = s.join();
  if (is_null(j)) fail(Err::DegenerateSide, "midpoints need a non-null join");
  Point pole = dual(j);
  auto mb = null_points_on(join(s.first(), pole));
  if (mb.size() < 2) return std::nullopt;
  auto mc = null_points_on(join(s.second(), pole));
  if (mc.size() < 2) return std::nullopt;
  Point d = meet(join(mb[0], mc[0]), join(mb[1], mc[1]));
  Point e = meet(join(mb[0], mc[1]), join(mb[1], mc[0]));
  if (Point::cmp(e, d) < 0) std::swap(d, e);
  return std::make_pair(d, e);
}

std::optional<std::pair<Line, Line>> midlines(const Side& s) {
  auto m = midpoints(s);
  if (!m) return std::nullopt;
  return std::make_pair(dual(m->first), dual(m->second));
}

std::optional<std::pair<Line, Line>> bilines(const Vertex& v) {
  if (nil_vertex(v) || null_vertex(v)) fail(Err::DegenerateVertex, "bilines need a non-nil, non-null vertex");
  auto m = midpoints(Side(dual(v.first()), dual(v.second())));
  if (!m) return std::nullopt;
  return std::make_pair(dual(m->first), dual(m->second));
}

std::optional<std::pair<Point, Point>> bipoints(const Vertex& v) {
  if (nil_vertex(v) || null_vertex(v)) fail(Err::DegenerateVertex, "bipoints need a non-nil, non-null vertex");
  return midpoints(Side(dual(v.first()), dual(v.second())));
}

}  // namespace uhg
