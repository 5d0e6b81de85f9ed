#include "uhg/metric.hpp"

namespace uhg {

Fq quadrance(const Point& a1, const Point& a2) {
  Fq n1 = form(a1, a1), n2 = form(a2, a2);
  if (n1.is_zero()) fail(Err::NullArgument, "quadrance from null point " + a1.str());
  if (n2.is_zero()) fail(Err::NullArgument, "quadrance to null point " + a2.str());
  Fq c = form(a1, a2);
  return Fq::one(a1.ctx()) - c * c / (n1 * n2);
}

Fq spread(const Line& l1, const Line& l2) {
  Fq n1 = form(l1, l1), n2 = form(l2, l2);
  if (n1.is_zero()) fail(Err::NullArgument, "spread from null line " + l1.str());
  if (n2.is_zero()) fail(Err::NullArgument, "spread to null line " + l2.str());
  Fq c = form(l1, l2);
  return Fq::one(l1.ctx()) - c * c / (n1 * n2);
}

Fq quadrance_cr(const Point& a1, const Point& a2) {
  if (is_null(a1) || is_null(a2)) fail(Err::NullArgument, "quadrance of a null point");
  Line j = join(a1, a2);
  Point b1 = meet(j, dual(a1));
  Point b2 = meet(j, dual(a2));
  ExtValue cr = cross_ratio(a1, b2, a2, b1);
  if (cr.is_infinite()) fail(Err::DegenerateQuadruple, "infinite quadrance cross-ratio");
  return cr.value();
}

Fq spread_cr(const Line& l1, const Line& l2) {
  if (is_null(l1) || is_null(l2)) fail(Err::NullArgument, "spread of a null line");
  return quadrance_cr(dual(l1), dual(l2));
}

Fq spread_dual_residual(const Line& l1, const Line& l2) {
  return spread(l1, l2) - quadrance(dual(l1), dual(l2));
}

TriangleMetrics triangle_metrics(const Point& a1, const Point& a2, const Point& a3) {
  if (collinear(a1, a2, a3))
    fail(Err::CollinearPoints, "triangle metrics of collinear points");
  Line l1 = join(a2, a3), l2 = join(a1, a3), l3 = join(a1, a2);
  TriangleMetrics m{{quadrance(a2, a3), quadrance(a1, a3), quadrance(a1, a2)},
                    {spread(l2, l3), spread(l1, l3), spread(l1, l2)},
                    Fq::zero(a1.ctx())};
  m.quadrea = m.S[0] * m.q[1] * m.q[2];
  if (m.quadrea != m.S[1] * m.q[0] * m.q[2] || m.quadrea != m.S[2] * m.q[0] * m.q[1])
    fail(Err::Inconsistent, "quadrea products disagree");
  return m;
}

Fq quadrea(const Point& a1, const Point& a2, const Point& a3) {
  return triangle_metrics(a1, a2, a3).quadrea;
}

Fq triple_relation_residual(const Fq& x1, const Fq& x2, const Fq& x3) {
  Fq s = x1 + x2 + x3;
  Fq two = Fq(x1.ctx(), 2), four = Fq(x1.ctx(), 4);
  return s * s - two * (x1 * x1 + x2 * x2 + x3 * x3) - four * x1 * x2 * x3;
}

Fq law_residual(Law law, const TriangleMetrics& m) {
  const Fq &q1 = m.q[0], &q2 = m.q[1], &q3 = m.q[2];
  const Fq &S1 = m.S[0], &S2 = m.S[1], &S3 = m.S[2];
  Fq one = Fq::one(q1.ctx());
  Fq two = one + one, four = two + two;
  switch (law) {
    case Law::TripleQuad:
    case Law::TripleSpread:
      fail(Err::HypothesisViolated, "triple relations take collinear/concurrent data");
    case Law::Pythagoras:
      if (!S3.is_one()) fail(Err::HypothesisViolated, "pythagoras needs S3 = 1");
      return q3 - (q1 + q2 - q1 * q2);
    case Law::PythagorasDual:
      if (!q3.is_one()) fail(Err::HypothesisViolated, "dual pythagoras needs q3 = 1");
      return S3 - (S1 + S2 - S1 * S2);
    case Law::SpreadLaw: {
      std::array<Fq, 3> r = {S1 * q2 - S2 * q1, S1 * q3 - S3 * q1, S2 * q3 - S3 * q2};
      for (const Fq& v : r)
        if (!v.is_zero()) return v;
      return Fq::zero(q1.ctx());
    }
    case Law::CrossLaw: {
      Fq lhs = q1 * q2 * S3 - (q1 + q2 + q3) + two;
      return lhs * lhs - four * (one - q1) * (one - q2) * (one - q3);
    }
    case Law::CrossDual: {
      Fq lhs = S1 * S2 * q3 - (S1 + S2 + S3) + two;
      return lhs * lhs - four * (one - S1) * (one - S2) * (one - S3);
    }
  }
  fail(Err::Inconsistent, "unknown law");
}

std::pair<Fq, Fq> thales_residuals(const TriangleMetrics& m) {
  if (!m.S[2].is_one()) fail(Err::HypothesisViolated, "thales needs S3 = 1");
  if (m.q[2].is_zero()) fail(Err::HypothesisViolated, "thales needs q3 != 0");
  return {m.S[0] * m.q[2] - m.q[0], m.S[1] * m.q[2] - m.q[1]};
}

Fq right_parallax(const Fq& S) {
  if (S.is_zero()) fail(Err::ZeroSpread, "parallax spread is zero");
  return (S - Fq::one(S.ctx())) / S;
}

Fq right_parallax_spread(const Fq& q) {
  Fq one = Fq::one(q.ctx());
  if (q.is_one()) fail(Err::DegenerateDenominator, "parallax quadrance is one");
  return one / (one - q);
}

namespace {

Fq dv(const Fq& a, const Fq& b) {
  if (b.is_zero()) fail(Err::DegenerateDenominator, "napier case divides by zero");
  return a / b;
}

}  // namespace

RightTriangle napier_solve(NapierKnown known, const Fq& first, const Fq& second) {
  const FieldCtx& ctx = common_ctx(first, second);
  Fq one = Fq::one(ctx);
  RightTriangle t{one, one, one, one, one};
  switch (known) {
    case NapierKnown::S1S2:
      t.S1 = first;
      t.S2 = second;
      t.q3 = dv(t.S1 + t.S2 - one, t.S1 * t.S2);
      t.q1 = t.S1 * t.q3;
      t.q2 = t.S2 * t.q3;
      break;
    case NapierKnown::S1q1:
      t.S1 = first;
      t.q1 = second;
      t.q3 = dv(t.q1, t.S1);
      t.q2 = dv(t.q3 - t.q1, one - t.q1);
      t.S2 = dv(t.q2, t.q3);
      break;
    case NapierKnown::S1q2:
      t.S1 = first;
      t.q2 = second;
      t.q3 = dv(t.q2, one - t.S1 + t.S1 * t.q2);
      t.q1 = t.S1 * t.q3;
      t.S2 = dv(t.q2, t.q3);
      break;
    case NapierKnown::S1q3:
      t.S1 = first;
      t.q3 = second;
      t.q1 = t.S1 * t.q3;
      t.S2 = dv(one - t.S1, one - t.S1 * t.q3);
      t.q2 = t.S2 * t.q3;
      break;
    case NapierKnown::S2q1:
      t.S2 = first;
      t.q1 = second;
      t.q3 = dv(t.q1, one - t.S2 + t.S2 * t.q1);
      t.q2 = t.S2 * t.q3;
      t.S1 = dv(t.q1, t.q3);
      break;
    case NapierKnown::S2q2:
      t.S2 = first;
      t.q2 = second;
      t.q3 = dv(t.q2, t.S2);
      t.q1 = dv(t.q3 - t.q2, one - t.q2);
      t.S1 = dv(t.q1, t.q3);
      break;
    case NapierKnown::S2q3:
      t.S2 = first;
      t.q3 = second;
      t.q2 = t.S2 * t.q3;
      t.S1 = dv(one - t.S2, one - t.S2 * t.q3);
      t.q1 = t.S1 * t.q3;
      break;
    case NapierKnown::q1q2:
      t.q1 = first;
      t.q2 = second;
      t.q3 = t.q1 + t.q2 - t.q1 * t.q2;
      t.S1 = dv(t.q1, t.q3);
      t.S2 = dv(t.q2, t.q3);
      break;
    case NapierKnown::q1q3:
      t.q1 = first;
      t.q3 = second;
      t.S1 = dv(t.q1, t.q3);
      t.q2 = dv(t.q3 - t.q1, one - t.q1);
      t.S2 = dv(t.q2, t.q3);
      break;
    case NapierKnown::q2q3:
      t.q2 = first;
      t.q3 = second;
      t.S2 = dv(t.q2, t.q3);
      t.q1 = dv(t.q3 - t.q2, one - t.q2);
      t.S1 = dv(t.q1, t.q3);
      break;
  }
  if (t.q3 != t.q1 + t.q2 - t.q1 * t.q2 || t.q1 != t.S1 * t.q3 || t.q2 != t.S2 * t.q3)
    fail(Err::Inconsistent, "napier solution fails re-verification");
  return t;
}

}  // namespace uhg
