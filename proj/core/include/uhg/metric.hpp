#pragma once

#include <array>
#include <utility>

#include "uhg/duality.hpp"

namespace uhg {

// q(a1,a2) = 1 - form(a1,a2)^2 / (form(a1,a1) form(a2,a2)).
// Zero exactly when the points coincide or their join is a null line.
Fq quadrance(const Point& a1, const Point& a2);  // NullArgument

// Same formula on line coordinates.
Fq spread(const Line& l1, const Line& l2);  // NullArgument

// Cross-ratio routes: q(a1,a2) = (a1,b2 : a2,b1) with (b1,b2) the conjugate
// points of the side, and dually for lines.
Fq quadrance_cr(const Point& a1, const Point& a2);
Fq spread_cr(const Line& l1, const Line& l2);

// spread(l1,l2) - quadrance(dual(l1), dual(l2)); always zero, kept as a
// residual so the identity can be checked rather than assumed.
Fq spread_dual_residual(const Line& l1, const Line& l2);

struct TriangleMetrics {
  std::array<Fq, 3> q;  // q[0] = q(a2,a3), q[1] = q(a1,a3), q[2] = q(a1,a2)
  std::array<Fq, 3> S;  // S[0] at a1, etc.
  Fq quadrea;           // S1 q2 q3 = S2 q1 q3 = S3 q1 q2
};

// Errors: CollinearPoints; NullArgument (a vertex or a joining line is null).
TriangleMetrics triangle_metrics(const Point& a1, const Point& a2, const Point& a3);

Fq quadrea(const Point& a1, const Point& a2, const Point& a3);

enum class Law {
  TripleQuad,
  TripleSpread,
  Pythagoras,
  PythagorasDual,
  SpreadLaw,
  CrossLaw,
  CrossDual,
};

// (x1+x2+x3)^2 - 2(x1^2+x2^2+x3^2) - 4 x1 x2 x3; zero for the quadrances of
// collinear points and, dually, the spreads of concurrent lines.
Fq triple_relation_residual(const Fq& x1, const Fq& x2, const Fq& x3);

// Residual of a law on triangle measurements.  Pythagoras requires S3 = 1,
// its dual q3 = 1 (HypothesisViolated otherwise).  TripleQuad / TripleSpread
// are not triangle laws and are rejected here; use triple_relation_residual.
// The spread law residual is the first nonzero cross-multiplied difference
// S_i q_j - S_j q_i, or zero when all three vanish.
Fq law_residual(Law law, const TriangleMetrics& m);

// S1 q3 - q1 and S2 q3 - q2 for a right triangle (S3 = 1, q3 != 0).
std::pair<Fq, Fq> thales_residuals(const TriangleMetrics& m);

// q = (S-1)/S for the right triangle with a null vertex; ZeroSpread on S = 0.
Fq right_parallax(const Fq& S);
// Inverse relation S = 1/(1-q); DegenerateDenominator on q = 1.
Fq right_parallax_spread(const Fq& q);

// A right triangle's five measurements; S3 = 1 is implicit.
struct RightTriangle {
  Fq q1, q2, q3, S1, S2;
};

enum class NapierKnown {
  S1S2,
  S1q1,
  S1q2,
  S1q3,
  S2q1,
  S2q2,
  S2q3,
  q1q2,
  q1q3,
  q2q3,
};

// Solves the remaining three measurements from the given two, using only
// rational operations, and re-verifies all three defining equations.
// Errors: DegenerateDenominator; Inconsistent.
RightTriangle napier_solve(NapierKnown known, const Fq& first, const Fq& second);

}  // namespace uhg
