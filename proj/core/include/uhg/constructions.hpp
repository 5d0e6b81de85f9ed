#pragma once

#include <optional>
#include <vector>

#include "uhg/metric.hpp"

namespace uhg {

// Joins opposite the respective vertices: l1 = join(a2,a3), etc.
std::array<Line, 3> triangle_lines(const Point& a1, const Point& a2, const Point& a3);

// Meet of the three altitude lines; DualTriangle when some vertex is the
// dual of its opposite line.
Point orthocenter(const Point& a1, const Point& a2, const Point& a3);
// Join of the three altitude points of the trilateral, dually.
Line ortholine(const Line& l1, const Line& l2, const Line& l3);

struct CircumStructure {
  std::array<std::pair<Point, Point>, 3> midpoints;  // per side, opposite vertex order
  std::vector<Line> circumlines;                     // lines holding three midpoints
  std::vector<Point> circumcenters;                  // their duals, same order
};

// The six side midpoints fall on four lines, three midpoints apiece; the dual
// points are equidistant from the three vertices.
// Errors: MidpointsAbsent (message names the side), CollinearPoints.
CircumStructure circumcenters(const Point& a1, const Point& a2, const Point& a3);

struct DoubleTriangle {
  std::array<Line, 3> parallels;  // parallel line of (a_i, opposite join)
  std::array<Point, 3> d;         // d1 = parallels[1] x parallels[2], etc.
};

// Errors: DualTriangle, DegenerateDouble.
DoubleTriangle double_triangle(const Point& a1, const Point& a2, const Point& a3);
// Concurrency point of the joins a_i d_i.
Point double_point(const Point& a1, const Point& a2, const Point& a3);
// Concurrency point of the joins a_i g_i, where g is the double triangle of d.
Point second_double_point(const Point& a1, const Point& a2, const Point& a3);

// 1/P + 1/R + 1/T - 3/4; ZeroSpread on a zero argument.
Fq reciprocal_sum_residual(const Fq& P, const Fq& R, const Fq& T);

// Symmetric conic coefficients (xx, yy, zz, xy, xz, yz).
using Conic = std::array<Fq, 6>;

// The circle q(x,a) = k with the quadrance denominator cleared:
// form(x,a)^2 - (1-k) form(a,a) form(x,x).  NullCenter when a is null.
Conic circle_conic(const Point& a, const Fq& k);
Fq conic_eval(const Conic& c, const Point& x);
// In-field points of the conic on a line, by the restricted quadratic.
std::vector<Point> conic_line_points(const Conic& c, const Line& l);

struct ParabolaPoints {
  std::array<Point, 2> points;
  std::array<Line, 2> tangents;  // the midlines; tangents[i] holds points[i]
};

// Points of the parabola with focus f1 and directrix D1 over the directrix
// point b1, together with their tangent lines.
// Errors: NotIncident (b1 off D1), NullArgument, MidlinesAbsent, DualCouple.
ParabolaPoints parabola_points(const Point& f1, const Line& D1, const Point& b1);

// q(a, f1) - q(a, base_point(a, D1)).
Fq parabola_locus_residual(const Point& f1, const Line& D1, const Point& a);

struct LimitingLines {
  Line U, V;
  Point u, v;  // the circle-altitude meets, u on U and v on V
};

// Limiting lines through a for the line L, by the midpoint-reflection and
// circle-intersection construction.
// Errors: ExteriorLine, MidpointsAbsent, NoIntersection, DualCouple.
LimitingLines bolyai_limiting_lines(const Point& a, const Line& L);

struct CanonicalPoints {
  Point alpha1, alpha2;            // null points of join(x3,y3), canonical order
  Point x1, y1, x2, y2;            // transferred pairs on the other two null joins
  Point b3;                        // third base point, lands on join(x3,y3)
  Point c1, c2, c3;                // cross meets
  Point z1, z2, z3, w1, w2, w3;    // derived pairs
};

// Errors: NoNullPointsOnJoin, DegenerateAux, IdenticalArguments.
CanonicalPoints canonical_points(const Point& x3, const Point& y3, const Point& alpha3,
                                 const Point& b1, const Point& b2);

// (q - 4r)^2 - 8qr(2r - q).
Fq canonical_cubic_residual(const Fq& q, const Fq& r);

struct JumpingJack {
  Point g, x, y, z, w;
  Fq r, s;
};

// Errors: DegenerateConfiguration, NotIncident (L off the diagonal point).
JumpingJack jumping_jack(const std::array<Point, 5>& alpha, const Line& L);

// 16rs(3 - 4(s + r)) - 1.
Fq jumping_jack_residual(const Fq& r, const Fq& s);

}  // namespace uhg
