#pragma once

#include <array>
#include <string>
#include <utility>

#include "uhg/field.hpp"

namespace uhg {

namespace detail {

// A homogeneous coordinate triple held in canonical form.  Over the rationals
// the canonical representative has coprime integer entries with the first
// nonzero entry positive; over F_p the first nonzero entry is 1.
class HomTriple {
 public:
  HomTriple(const Fq& a, const Fq& b, const Fq& c);

  const Fq& at(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const FieldCtx& ctx() const { return c_[0].ctx(); }

  bool operator==(const HomTriple& o) const;
  bool operator!=(const HomTriple& o) const { return !(*this == o); }
  static int cmp(const HomTriple& a, const HomTriple& b);

  std::string str(char open, char close) const;

 private:
  std::array<Fq, 3> c_;
};

}  // namespace detail

class Point {
 public:
  Point(const Fq& x, const Fq& y, const Fq& z) : t_(x, y, z) {}
  Point(const FieldCtx& ctx, long x, long y, long z)
      : t_(Fq(ctx, x), Fq(ctx, y), Fq(ctx, z)) {}

  const Fq& x() const { return t_.at(0); }
  const Fq& y() const { return t_.at(1); }
  const Fq& z() const { return t_.at(2); }
  const FieldCtx& ctx() const { return t_.ctx(); }

  bool operator==(const Point& o) const { return t_ == o.t_; }
  bool operator!=(const Point& o) const { return t_ != o.t_; }
  static int cmp(const Point& a, const Point& b) { return detail::HomTriple::cmp(a.t_, b.t_); }

  std::string str() const { return t_.str('[', ']'); }

 private:
  detail::HomTriple t_;
};

class Line {
 public:
  Line(const Fq& a, const Fq& b, const Fq& c) : t_(a, b, c) {}
  Line(const FieldCtx& ctx, long a, long b, long c)
      : t_(Fq(ctx, a), Fq(ctx, b), Fq(ctx, c)) {}

  const Fq& a() const { return t_.at(0); }
  const Fq& b() const { return t_.at(1); }
  const Fq& c() const { return t_.at(2); }
  const FieldCtx& ctx() const { return t_.ctx(); }

  bool operator==(const Line& o) const { return t_ == o.t_; }
  bool operator!=(const Line& o) const { return t_ != o.t_; }
  static int cmp(const Line& a, const Line& b) { return detail::HomTriple::cmp(a.t_, b.t_); }

  std::string str() const { return t_.str('(', ')'); }

 private:
  detail::HomTriple t_;
};

// The symmetric bilinear form x1*x2 + y1*y2 - z1*z2 evaluated on canonical
// coordinates.  Every incidence, perpendicularity and nullity test in the
// library reduces to this form.
Fq form(const Point& u, const Point& v);
Fq form(const Line& u, const Line& v);

// a*x + b*y - c*z; zero exactly when the point lies on the line.
Fq incidence_form(const Point& p, const Line& l);
bool incident(const Point& p, const Line& l);
bool incident(const Line& l, const Point& p);

Line join(const Point& p, const Point& q);   // IdenticalArguments when p == q
Point meet(const Line& l, const Line& m);    // IdenticalArguments when l == m

bool collinear(const Point& a, const Point& b, const Point& c);
bool concurrent(const Line& a, const Line& b, const Line& c);

// A field value extended with a single infinity.
class ExtValue {
 public:
  static ExtValue finite(const Fq& v) { return ExtValue(v, false); }
  static ExtValue infinity(const FieldCtx& ctx) { return ExtValue(Fq::zero(ctx), true); }

  bool is_infinite() const { return infinite_; }
  const Fq& value() const;
  const FieldCtx& ctx() const { return v_.ctx(); }

  bool operator==(const ExtValue& o) const;
  bool operator!=(const ExtValue& o) const { return !(*this == o); }

  std::string str() const { return infinite_ ? std::string("inf") : v_.str(); }

 private:
  ExtValue(const Fq& v, bool inf) : v_(v), infinite_(inf) {}
  Fq v_;
  bool infinite_;
};

// Cross-ratio (a,b;c,d) of four collinear points, a != b, at most two equal.
// Errors: IdenticalArguments (a == b), NotCollinear, DegenerateQuadruple.
ExtValue cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d);

// Two distinct points spanning a line.
std::pair<Point, Point> span_points(const Line& l);

// The point p + t*q where (p, q) = span_points(l); t = inf gives q.
Point point_on(const Line& l, const ExtValue& t);

// Meets of the three cross joins a_i b_j x a_j b_i are collinear when the a_i
// are collinear and the b_i are collinear.
bool pappus_collinear(const std::array<Point, 3>& a, const std::array<Point, 3>& b);

// Meets of corresponding sides are collinear when the joins a_i b_i concur.
bool desargues_collinear(const std::array<Point, 3>& a, const std::array<Point, 3>& b);

}  // namespace uhg
