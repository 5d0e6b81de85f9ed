#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uhg/projective.hpp"

namespace uhg {

// Polarity in the null circle x^2 + y^2 - z^2 = 0: swap the bracket kind.
Line dual(const Point& p);
Point dual(const Line& l);

bool is_null(const Point& p);  // form(p, p) == 0
bool is_null(const Line& l);

bool perpendicular(const Point& u, const Point& v);  // form(u, v) == 0
bool perpendicular(const Line& u, const Line& v);

// Sign taxonomy; RationalOnly over prime fields.
bool interior(const Point& p);  // form(p, p) < 0
bool exterior(const Point& p);  // form(p, p) > 0
bool interior(const Line& l);   // pole exterior: the line crosses the null circle
bool exterior(const Line& l);

// An unordered pair of distinct points, stored in canonical order.
class Side {
 public:
  Side(const Point& a, const Point& b);  // IdenticalArguments
  const Point& first() const { return a_; }
  const Point& second() const { return b_; }
  Line join() const;
  bool operator==(const Side& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  Point a_, b_;
};

// An unordered pair of distinct lines, stored in canonical order.
class Vertex {
 public:
  Vertex(const Line& a, const Line& b);  // IdenticalArguments
  const Line& first() const { return a_; }
  const Line& second() const { return b_; }
  Point meet() const;
  bool operator==(const Vertex& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  Line a_, b_;
};

// A point together with a line that is not its dual.
class Couple {
 public:
  Couple(const Point& a, const Line& l);  // DualCouple
  const Point& point() const { return a_; }
  const Line& line() const { return l_; }

 private:
  Point a_;
  Line l_;
};

bool nil_side(const Side& s);    // a member is null
bool null_side(const Side& s);   // the join is null
bool nil_vertex(const Vertex& v);
bool null_vertex(const Vertex& v);

// Altitude to the line through the point, and its dual notion.
Line altitude_line(const Couple& c);   // join(a, dual(L))
Point altitude_point(const Couple& c); // meet(L, dual(a))

// Line through the point perpendicular to the altitude, and its dual notion.
Line parallel_line(const Couple& c);   // join(a, meet(dual(a), L))
Point parallel_point(const Couple& c); // meet(dual(a), join(a, dual(L)))

// Foot of the altitude on the line, and its dual notion.
Point base_point(const Couple& c);     // meet(altitude_line, L)
Line base_line(const Couple& c);       // join(altitude_point, dual(L))

// Meets of the join with the duals of either member, in member order.
// Errors: NilNullSide / DegenerateVertex for nil or null input pairs.
std::pair<Point, Point> conjugate_points(const Side& s);
std::pair<Line, Line> conjugate_lines(const Vertex& v);

// Reflection in a non-null point: x -> 2 form(x,a) a - form(a,a) x.
Point reflect_point(const Point& x, const Point& mirror);  // NullMirror
// Reflection of a line, by transporting two spanning points.
Line reflect_line(const Line& l, const Point& mirror);
// The same reflections indexed by the dual line mirror, computed through the
// opposite representation so agreement with the point versions is a theorem.
Point reflect_point_in_line(const Point& x, const Line& mirror);
Line reflect_line_in_line(const Line& l, const Line& mirror);

// [1-t^2 : 2t : 1+t^2], with t = inf giving [-1:0:1].
Point null_point(const ExtValue& t);
Point null_point(const Fq& t);

// The in-field points of the null circle on l: empty, one (tangent line), or
// two, in canonical order.
std::vector<Point> null_points_on(const Line& l);
bool tangent_line(const Line& l);  // dual point is null

// Midpoints of a side via the null quadrangle of its two perpendicular
// secants; absent when either secant misses the null circle in the field.
// Errors: DegenerateSide (nil member, null join, or coincident members).
std::optional<std::pair<Point, Point>> midpoints(const Side& s);
// Duals of the midpoints, in the same order.
std::optional<std::pair<Line, Line>> midlines(const Side& s);
// Duals of the midpoints of the dual side, in the same order.
std::optional<std::pair<Line, Line>> bilines(const Vertex& v);
// Midpoints of the dual side: the poles of the bilines.
std::optional<std::pair<Point, Point>> bipoints(const Vertex& v);

}  // namespace uhg
