#include "uhg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "uhg/constructions.hpp"
#include "uhg/generators.hpp"
#include "uhg/rng.hpp"

namespace uhg {

namespace {

using Verdict = std::optional<std::string>;
using CheckFn = Verdict (*)(const FieldCtx&, Rng&);

// Witness accumulator: a claim line followed by the objects involved.
class W {
 public:
  explicit W(const char* claim) { os_ << claim; }
  template <typename T>
  W& with(const char* name, const T& v) {
    os_ << "\n  " << name << " = " << v.str();
    return *this;
  }
  W& text(const char* name, const std::string& v) {
    os_ << "\n  " << name << " = " << v;
    return *this;
  }
  operator Verdict() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

// Retries a build-and-evaluate closure past degenerate configurations.  The
// closure must report theorem violations through its return value, never as
// exceptions, so that a retry can only consume degeneracies.
template <typename F>
Verdict retrying(F f) {
  for (int i = 0; i < gen::kMaxRejects; ++i) {
    try {
      return f();
    } catch (const Error&) {
      continue;
    }
  }
  gen::exhausted("a nondegenerate configuration");
}

std::vector<Point> distinct_points_on(const Line& l, Rng& rng, int n) {
  std::vector<Point> out;
  int budget = gen::kMaxRejects * n;
  while (static_cast<int>(out.size()) < n && budget-- > 0) {
    Point p = gen::nonnull_point_on_line(l, rng);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (static_cast<int>(out.size()) < n) gen::exhausted("distinct points on a line");
  return out;
}

std::vector<Line> distinct_lines_through(const Point& v, const FieldCtx& ctx, Rng& rng, int n) {
  std::vector<Line> out;
  int budget = gen::kMaxRejects * n;
  while (static_cast<int>(out.size()) < n && budget-- > 0) {
    Point r = gen::random_point(ctx, rng);
    if (r == v) continue;
    Line l = join(v, r);
    if (is_null(l)) continue;
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  if (static_cast<int>(out.size()) < n) gen::exhausted("distinct lines through a point");
  return out;
}

Point fresh_null(const FieldCtx& ctx, Rng& rng, const std::vector<Point>& avoid) {
  for (int i = 0; i < gen::kMaxRejects; ++i) {
    Point p = gen::random_null(ctx, rng);
    if (std::find(avoid.begin(), avoid.end(), p) == avoid.end()) return p;
  }
  gen::exhausted("a fresh null point");
}

// ---------------------------------------------------------------- law checks

Verdict check_triple_quad(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Line l = gen::random_line(ctx, rng);
    std::vector<Point> a = distinct_points_on(l, rng, 3);
    Fq r = triple_relation_residual(quadrance(a[0], a[1]), quadrance(a[1], a[2]),
                                    quadrance(a[0], a[2]));
    if (r.is_zero()) return std::nullopt;
    return W("collinear quadrance triple relation violated")
        .with("residual", r)
        .with("l", l)
        .with("a1", a[0])
        .with("a2", a[1])
        .with("a3", a[2]);
  });
}

Verdict check_triple_spread(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point v = gen::random_point(ctx, rng);
    std::vector<Line> l = distinct_lines_through(v, ctx, rng, 3);
    Fq r = triple_relation_residual(spread(l[0], l[1]), spread(l[1], l[2]), spread(l[0], l[2]));
    if (r.is_zero()) return std::nullopt;
    return W("concurrent spread triple relation violated")
        .with("residual", r)
        .with("v", v)
        .with("l1", l[0])
        .with("l2", l[1])
        .with("l3", l[2]);
  });
}

Verdict law_check(const FieldCtx& ctx, Rng& rng, Law law, bool right) {
  return retrying([&, law, right]() -> Verdict {
    std::array<Point, 3> t = right ? gen::right_triangle(ctx, rng) : gen::triangle(ctx, rng);
    TriangleMetrics m = triangle_metrics(t[0], t[1], t[2]);
    Fq r = law_residual(law, m);
    if (r.is_zero()) return std::nullopt;
    return W("triangle law residual nonzero")
        .with("residual", r)
        .with("a1", t[0])
        .with("a2", t[1])
        .with("a3", t[2]);
  });
}

Verdict check_pythagoras(const FieldCtx& ctx, Rng& rng) {
  return law_check(ctx, rng, Law::Pythagoras, true);
}

Verdict check_pythagoras_dual(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point a1 = gen::random_point(ctx, rng);
    Point a2 = gen::nonnull_point_on_line(dual(a1), rng);
    Point a3 = gen::random_point(ctx, rng);
    if (a1 == a2 || a1 == a3 || a2 == a3 || collinear(a1, a2, a3)) gen::exhausted("a triangle");
    if (is_null(join(a2, a3)) || is_null(join(a1, a3)) || is_null(join(a1, a2)))
      gen::exhausted("a triangle");
    TriangleMetrics m = triangle_metrics(a1, a2, a3);
    Fq r = law_residual(Law::PythagorasDual, m);
    if (r.is_zero()) return std::nullopt;
    return W("dual Pythagoras residual nonzero")
        .with("residual", r)
        .with("a1", a1)
        .with("a2", a2)
        .with("a3", a3);
  });
}

Verdict check_spread_law(const FieldCtx& ctx, Rng& rng) {
  return law_check(ctx, rng, Law::SpreadLaw, false);
}

Verdict check_cross_law(const FieldCtx& ctx, Rng& rng) {
  return law_check(ctx, rng, Law::CrossLaw, false);
}

Verdict check_cross_law_dual(const FieldCtx& ctx, Rng& rng) {
  return law_check(ctx, rng, Law::CrossDual, false);
}

Verdict check_thales(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::right_triangle(ctx, rng);
    TriangleMetrics m = triangle_metrics(t[0], t[1], t[2]);
    auto [r1, r2] = thales_residuals(m);
    if (r1.is_zero() && r2.is_zero()) return std::nullopt;
    return W("Thales proportions violated")
        .with("S1*q3 - q1", r1)
        .with("S2*q3 - q2", r2)
        .with("a1", t[0])
        .with("a2", t[1])
        .with("a3", t[2]);
  });
}

Verdict check_right_parallax(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point alpha = gen::random_null(ctx, rng);
    Point a3 = gen::random_point(ctx, rng);
    Line l2 = join(alpha, a3);
    if (is_null(l2)) gen::exhausted("a secant side");
    Point pole = dual(l2);
    if (pole == a3) gen::exhausted("a nondegenerate right vertex");
    Line l1 = join(a3, pole);
    if (is_null(l1)) gen::exhausted("a non-null side");
    Point a2 = gen::nonnull_point_on_line(l1, rng);
    if (a2 == a3 || incident(a2, l2)) gen::exhausted("a distinct vertex");
    Line l3 = join(a2, alpha);
    if (is_null(l3)) gen::exhausted("a non-null side");
    Fq q = quadrance(a2, a3);
    Fq S = spread(l3, l1);
    Fq r = q * S - S + Fq::one(ctx);
    if (!r.is_zero())
      return W("right parallax relation violated")
          .with("residual", r)
          .with("q", q)
          .with("S", S)
          .with("alpha", alpha)
          .with("a2", a2)
          .with("a3", a3);
    if (right_parallax(S) != q || right_parallax_spread(q) != S)
      return W("parallax conversions disagree with measured values")
          .with("q", q)
          .with("S", S)
          .with("alpha", alpha)
          .with("a2", a2)
          .with("a3", a3);
    return std::nullopt;
  });
}

Verdict check_napier_rules(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::right_triangle(ctx, rng);
    TriangleMetrics m = triangle_metrics(t[0], t[1], t[2]);
    if (!m.S[2].is_one()) gen::exhausted("a right triangle");
    RightTriangle rt{m.q[0], m.q[1], m.q[2], m.S[0], m.S[1]};
    const std::array<std::tuple<NapierKnown, Fq, Fq>, 10> cases = {
        std::tuple{NapierKnown::S1S2, rt.S1, rt.S2}, std::tuple{NapierKnown::S1q1, rt.S1, rt.q1},
        std::tuple{NapierKnown::S1q2, rt.S1, rt.q2}, std::tuple{NapierKnown::S1q3, rt.S1, rt.q3},
        std::tuple{NapierKnown::S2q1, rt.S2, rt.q1}, std::tuple{NapierKnown::S2q2, rt.S2, rt.q2},
        std::tuple{NapierKnown::S2q3, rt.S2, rt.q3}, std::tuple{NapierKnown::q1q2, rt.q1, rt.q2},
        std::tuple{NapierKnown::q1q3, rt.q1, rt.q3}, std::tuple{NapierKnown::q2q3, rt.q2, rt.q3}};
    int solved = 0;
    for (const auto& [known, first, second] : cases) {
      try {
        RightTriangle sol = napier_solve(known, first, second);
        if (sol.q1 != rt.q1 || sol.q2 != rt.q2 || sol.q3 != rt.q3 || sol.S1 != rt.S1 ||
            sol.S2 != rt.S2)
          return W("two measurements failed to recover the right triangle")
              .text("case", std::to_string(static_cast<int>(known)))
              .with("a1", t[0])
              .with("a2", t[1])
              .with("a3", t[2]);
        ++solved;
      } catch (const Error& e) {
        if (e.code() == Err::DegenerateDenominator) continue;
        return W("solver rejected consistent measurements")
            .text("error", e.what())
            .with("a1", t[0])
            .with("a2", t[1])
            .with("a3", t[2]);
      }
    }
    if (solved == 0) gen::exhausted("a solvable right triangle");
    return std::nullopt;
  });
}

Verdict check_quadrance_cross_ratio(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point a = gen::random_point(ctx, rng);
    Point b = gen::random_point(ctx, rng);
    if (a == b) gen::exhausted("a side");
    if (is_null(join(a, b))) gen::exhausted("a non-null join");
    Fq lhs = quadrance(a, b);
    Fq rhs = quadrance_cr(a, b);
    if (lhs == rhs) return std::nullopt;
    return W("closed form disagrees with the cross-ratio definition")
        .with("quadrance", lhs)
        .with("cross_ratio_route", rhs)
        .with("a", a)
        .with("b", b);
  });
}

Verdict check_spread_cross_ratio(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Line l = gen::random_line(ctx, rng);
    Line m = gen::random_line(ctx, rng);
    if (l == m) gen::exhausted("a vertex");
    Fq lhs = spread(l, m);
    Fq rhs = spread_cr(l, m);
    if (lhs == rhs) return std::nullopt;
    return W("closed form disagrees with the cross-ratio definition")
        .with("spread", lhs)
        .with("cross_ratio_route", rhs)
        .with("l", l)
        .with("m", m);
  });
}

Verdict check_quadrance_signs(const FieldCtx& ctx, Rng& rng) {
  if (!ctx.is_rational())
    fail(Err::RationalOnly, "the sign taxonomy needs an ordered field");
  return retrying([&]() -> Verdict {
    Point a = gen::random_point(ctx, rng);
    Point b = gen::random_point(ctx, rng);
    if (a == b) gen::exhausted("a pair");
    Line j = join(a, b);
    Fq q = quadrance(a, b);
    int qs = sgn(q.rep());
    if (is_null(j)) {
      if (qs != 0)
        return W("null join without zero quadrance").with("q", q).with("a", a).with("b", b);
    } else {
      bool ia = interior(a), ib = interior(b);
      int expect = 0;
      if (ia && ib) expect = -1;
      else if (ia != ib) expect = 1;
      else expect = interior(j) ? -1 : 1;
      if (qs != expect)
        return W("quadrance sign disagrees with the interior taxonomy")
            .with("q", q)
            .with("a", a)
            .with("b", b)
            .with("join", j);
    }
    Point nu = gen::random_null(ctx, rng);
    std::vector<Point> xy = distinct_points_on(dual(nu), rng, 2);
    Fq qz = quadrance(xy[0], xy[1]);
    if (!qz.is_zero())
      return W("points of a null line have nonzero quadrance")
          .with("q", qz)
          .with("x", xy[0])
          .with("y", xy[1]);
    return std::nullopt;
  });
}

// ----------------------------------------------------------- triangle checks

Verdict check_pons_asinorum(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::isosceles_triangle(ctx, rng);
    TriangleMetrics m = triangle_metrics(t[0], t[1], t[2]);
    if (m.q[0] != m.q[1])
      return W("reflection failed to equalize base quadrances")
          .with("q1", m.q[0])
          .with("q2", m.q[1])
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    if (m.S[0] != m.S[1])
      return W("equal quadrances without equal spreads")
          .with("S1", m.S[0])
          .with("S2", m.S[1])
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    std::array<Point, 3> g = gen::triangle(ctx, rng);
    TriangleMetrics mg = triangle_metrics(g[0], g[1], g[2]);
    if ((mg.q[0] == mg.q[1]) != (mg.S[0] == mg.S[1]))
      return W("isosceles equivalence fails on a generic triangle")
          .with("a1", g[0])
          .with("a2", g[1])
          .with("a3", g[2]);
    return std::nullopt;
  });
}

Verdict check_isosceles(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::isosceles_triangle(ctx, rng);
    TriangleMetrics m = triangle_metrics(t[0], t[1], t[2]);
    if (m.q[0] != m.q[1] || m.S[0] != m.S[1])
      return W("generated triangle is not isosceles")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    Fq one = Fq::one(ctx);
    Fq four(ctx, 4);
    Fq q = m.q[0], S = m.S[0];
    Fq den = one - S * q;
    if (den.is_zero()) gen::exhausted("a nondegenerate apex");
    Fq r1 = m.q[2] * den * den - four * (one - S) * q * (one - q);
    Fq r2 = m.S[2] * den * den - four * S * (one - S) * (one - q);
    if (r1.is_zero() && r2.is_zero()) return std::nullopt;
    return W("isosceles base formulas violated")
        .with("base quadrance residual", r1)
        .with("apex spread residual", r2)
        .with("a1", t[0])
        .with("a2", t[1])
        .with("a3", t[2]);
  });
}

Verdict check_isosceles_right(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Line l3 = gen::random_line(ctx, rng);
    std::vector<Point> base = distinct_points_on(l3, rng, 2);
    Point a3 = dual(l3);
    Point a1 = base[0], a2 = base[1];
    if (is_null(join(a1, a3)) || is_null(join(a2, a3))) gen::exhausted("non-null sides");
    TriangleMetrics m = triangle_metrics(a1, a2, a3);
    Fq one = Fq::one(ctx);
    if (!m.S[0].is_one() || !m.S[1].is_one())
      return W("dual apex without two right spreads")
          .with("S1", m.S[0])
          .with("S2", m.S[1])
          .with("a1", a1)
          .with("a2", a2)
          .with("a3", a3);
    if (m.q[0] != one || m.q[1] != one || m.S[2] != m.q[2])
      return W("doubly right triangle relations violated")
          .with("q1", m.q[0])
          .with("q2", m.q[1])
          .with("S3", m.S[2])
          .with("q3", m.q[2])
          .with("a1", a1)
          .with("a2", a2)
          .with("a3", a3);
    return std::nullopt;
  });
}

Verdict check_isosceles_parallax(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point alpha = gen::random_null(ctx, rng);
    Line tang = dual(alpha);
    Point mirror = gen::nonnull_point_on_line(tang, rng);
    Point a2 = gen::random_point(ctx, rng);
    if (incident(a2, tang)) gen::exhausted("a vertex off the tangent");
    Point a3 = reflect_point(a2, mirror);
    if (a3 == a2 || collinear(alpha, a2, a3)) gen::exhausted("a proper triangle");
    Line l3 = join(alpha, a2);
    Line l2 = join(alpha, a3);
    Line l1 = join(a2, a3);
    if (is_null(l3) || is_null(l2) || is_null(l1)) gen::exhausted("non-null sides");
    Fq S2 = spread(l3, l1);
    Fq S3 = spread(l2, l1);
    if (S2 != S3)
      return W("mirror failed to equalize spreads")
          .with("S2", S2)
          .with("S3", S3)
          .with("alpha", alpha)
          .with("a2", a2)
          .with("a3", a3);
    Fq q = quadrance(a2, a3);
    Fq r = q * S2 * S2 - Fq(ctx, 4) * (S2 - Fq::one(ctx));
    if (r.is_zero()) return std::nullopt;
    return W("null-vertex isosceles relation violated")
        .with("residual", r)
        .with("q", q)
        .with("S", S2)
        .with("alpha", alpha)
        .with("a2", a2)
        .with("a3", a3);
  });
}

Verdict check_equilateral(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::equilateral_triangle(ctx, rng);
    TriangleMetrics m = triangle_metrics(t[0], t[1], t[2]);
    if (m.q[0] != m.q[1] || m.q[1] != m.q[2] || m.S[0] != m.S[1] || m.S[1] != m.S[2])
      return W("generated triangle is not equilateral")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    Fq one = Fq::one(ctx);
    Fq q = m.q[0], S = m.S[0];
    Fq d = one - S * q;
    Fq r = d * d - Fq(ctx, 4) * (one - S) * (one - q);
    if (r.is_zero()) return std::nullopt;
    return W("equilateral relation violated")
        .with("residual", r)
        .with("q", q)
        .with("S", S)
        .with("a1", t[0])
        .with("a2", t[1])
        .with("a3", t[2]);
  });
}

Verdict check_triangle_proportions(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    TriangleMetrics m = triangle_metrics(t[0], t[1], t[2]);
    Line l3 = join(t[0], t[1]);
    Point d = gen::nonnull_point_on_line(l3, rng);
    if (d == t[0] || d == t[1]) gen::exhausted("an interior cevian foot");
    Line cev = join(t[2], d);
    if (is_null(cev)) gen::exhausted("a non-null cevian");
    Fq r1 = quadrance(t[0], d), r2 = quadrance(t[1], d);
    Fq R1 = spread(join(t[2], t[0]), cev);
    Fq R2 = spread(join(t[2], t[1]), cev);
    Fq resS = R1 * m.S[1] * r2 - R2 * m.S[0] * r1;
    Fq resQ = R1 * m.q[1] * r2 - R2 * m.q[0] * r1;
    if (resS.is_zero() && resQ.is_zero()) return std::nullopt;
    return W("cevian proportion violated")
        .with("spread route residual", resS)
        .with("quadrance route residual", resQ)
        .with("a1", t[0])
        .with("a2", t[1])
        .with("a3", t[2])
        .with("d", d);
  });
}

Verdict products_verdict(const char* claim, const Fq& lhs, const Fq& rhs,
                         const std::array<Point, 3>& t, const Point* extra, const char* name) {
  if (lhs == rhs) return std::nullopt;
  W w(claim);
  w.with("lhs", lhs).with("rhs", rhs).with("a1", t[0]).with("a2", t[1]).with("a3", t[2]);
  if (extra) w.with(name, *extra);
  return w;
}

Verdict check_menelaus(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    Line l1 = join(t[1], t[2]), l2 = join(t[2], t[0]), l3 = join(t[0], t[1]);
    Line L = gen::random_line(ctx, rng);
    if (L == l1 || L == l2 || L == l3) gen::exhausted("a transversal");
    Point b1 = meet(L, l1), b2 = meet(L, l2), b3 = meet(L, l3);
    if (is_null(b1) || is_null(b2) || is_null(b3)) gen::exhausted("non-null crossings");
    Fq lhs = quadrance(t[1], b1) * quadrance(t[2], b2) * quadrance(t[0], b3);
    Fq rhs = quadrance(b1, t[2]) * quadrance(b2, t[0]) * quadrance(b3, t[1]);
    return products_verdict("transversal quadrance products differ", lhs, rhs, t, nullptr, "");
  });
}

Verdict check_ceva(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    Line l1 = join(t[1], t[2]), l2 = join(t[2], t[0]), l3 = join(t[0], t[1]);
    Point a0 = gen::random_point(ctx, rng);
    if (incident(a0, l1) || incident(a0, l2) || incident(a0, l3))
      gen::exhausted("a cevian point off the sides");
    Point b1 = meet(join(a0, t[0]), l1);
    Point b2 = meet(join(a0, t[1]), l2);
    Point b3 = meet(join(a0, t[2]), l3);
    if (is_null(b1) || is_null(b2) || is_null(b3)) gen::exhausted("non-null cevian feet");
    Fq lhs = quadrance(t[1], b1) * quadrance(t[2], b2) * quadrance(t[0], b3);
    Fq rhs = quadrance(b1, t[2]) * quadrance(b2, t[0]) * quadrance(b3, t[1]);
    return products_verdict("cevian quadrance products differ", lhs, rhs, t, &a0, "a0");
  });
}

Verdict check_menelaus_dual(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    Line A1 = join(t[1], t[2]), A2 = join(t[2], t[0]), A3 = join(t[0], t[1]);
    Point l = gen::random_point(ctx, rng);
    if (incident(l, A1) || incident(l, A2) || incident(l, A3))
      gen::exhausted("a transversal point off the lines");
    Line B1 = join(l, t[0]), B2 = join(l, t[1]), B3 = join(l, t[2]);
    if (is_null(B1) || is_null(B2) || is_null(B3)) gen::exhausted("non-null transversal joins");
    Fq lhs = spread(A2, B1) * spread(A3, B2) * spread(A1, B3);
    Fq rhs = spread(B1, A3) * spread(B2, A1) * spread(B3, A2);
    return products_verdict("transversal spread products differ", lhs, rhs, t, &l, "l");
  });
}

Verdict check_ceva_dual(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    Line A1 = join(t[1], t[2]), A2 = join(t[2], t[0]), A3 = join(t[0], t[1]);
    Line A0 = gen::random_line(ctx, rng);
    if (A0 == A1 || A0 == A2 || A0 == A3) gen::exhausted("a distinct base line");
    if (incident(t[0], A0) || incident(t[1], A0) || incident(t[2], A0))
      gen::exhausted("a base line off the vertices");
    Line B1 = join(meet(A0, A1), t[0]);
    Line B2 = join(meet(A0, A2), t[1]);
    Line B3 = join(meet(A0, A3), t[2]);
    if (is_null(B1) || is_null(B2) || is_null(B3)) gen::exhausted("non-null cross joins");
    Fq lhs = spread(A2, B1) * spread(A3, B2) * spread(A1, B3);
    Fq rhs = spread(B1, A3) * spread(B2, A1) * spread(B3, A2);
    return products_verdict("cross join spread products differ", lhs, rhs, t, nullptr, "");
  });
}

Verdict check_lambert(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 4> Qd = gen::lambert_quadrilateral(ctx, rng);
    const Point &a = Qd[0], &b = Qd[1], &c = Qd[2], &d = Qd[3];
    Fq one = Fq::one(ctx), two(ctx, 2);
    Fq q = quadrance(a, b), p = quadrance(b, c);
    Fq den = one - q * p;
    if (den.is_zero()) gen::exhausted("a nondegenerate quadrilateral");
    Fq y = quadrance(c, d), x = quadrance(a, d), s = quadrance(a, c), r = quadrance(b, d);
    if (r.is_zero() || s.is_zero()) gen::exhausted("nonzero diagonals");
    std::array<Fq, 11> res = {
        y * den - q * (one - p),
        x * den - p * (one - q),
        s - (q + p - q * p),
        r * den - (q + p - two * q * p),
        spread(join(b, a), join(b, d)) * r - x,
        spread(join(b, c), join(b, d)) * r - y,
        spread(join(c, b), join(c, a)) * s - q,
        spread(join(a, c), join(a, b)) * s - p,
        spread(join(a, c), join(a, d)) * s - q * (one - p),
        spread(join(c, a), join(c, d)) * s - p * (one - q),
        spread(join(d, a), join(d, c)) - (one - p * q),
    };
    for (std::size_t i = 0; i < res.size(); ++i)
      if (!res[i].is_zero())
        return W("Lambert quadrilateral display violated")
            .text("display", std::to_string(i + 1))
            .with("residual", res[i])
            .with("a", a)
            .with("b", b)
            .with("c", c)
            .with("d", d);
    return std::nullopt;
  });
}

// ------------------------------------------------------- null configurations

Verdict check_triply_nil_altitudes(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Line l12 = join(nu[0], nu[1]), l13 = join(nu[0], nu[2]), l23 = join(nu[1], nu[2]);
    Point b = gen::nonnull_point_on_line(l12, rng);
    Line A1 = altitude_line(Couple(b, l13));
    Line A2 = altitude_line(Couple(b, l23));
    if (perpendicular(A1, A2)) return std::nullopt;
    return W("altitudes from a point of the third side are not perpendicular")
        .with("b", b)
        .with("alpha1", nu[0])
        .with("alpha2", nu[1])
        .with("alpha3", nu[2]);
  });
}

Verdict check_nil_quadrangle_diagonal(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 4);
    Point e = meet(join(nu[0], nu[1]), join(nu[2], nu[3]));
    Point f = meet(join(nu[0], nu[2]), join(nu[1], nu[3]));
    Point g = meet(join(nu[0], nu[3]), join(nu[1], nu[2]));
    if (e == f || e == g || f == g) gen::exhausted("a proper diagonal triangle");
    bool points_ok = perpendicular(e, f) && perpendicular(e, g) && perpendicular(f, g);
    bool lines_ok = perpendicular(join(e, f), join(e, g)) &&
                    perpendicular(join(e, f), join(f, g)) &&
                    perpendicular(join(e, g), join(f, g));
    if (points_ok && lines_ok) return std::nullopt;
    return W("diagonal triangle of a nil quadrangle is not self-polar")
        .with("e", e)
        .with("f", f)
        .with("g", g);
  });
}

Verdict check_cevian_thinness(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Point a = gen::random_point(ctx, rng);
    Line s1 = join(nu[1], nu[2]), s2 = join(nu[0], nu[2]), s3 = join(nu[0], nu[1]);
    if (incident(a, s1) || incident(a, s2) || incident(a, s3))
      gen::exhausted("a cevian point off the nil triangle");
    Point c1 = meet(join(a, nu[0]), s1);
    Point c2 = meet(join(a, nu[1]), s2);
    Point c3 = meet(join(a, nu[2]), s3);
    Fq A = quadrea(c1, c2, c3);
    if (A.is_one()) return std::nullopt;
    return W("cevian triangle of a nil triangle is not thin")
        .with("quadrea", A)
        .with("a", a)
        .with("c1", c1)
        .with("c2", c2)
        .with("c3", c3);
  });
}

Verdict check_altitude_thinness(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Point a = gen::random_point(ctx, rng);
    Line s1 = join(nu[1], nu[2]), s2 = join(nu[0], nu[2]), s3 = join(nu[0], nu[1]);
    Point b1 = base_point(Couple(a, s1));
    Point b2 = base_point(Couple(a, s2));
    Point b3 = base_point(Couple(a, s3));
    Fq A = quadrea(b1, b2, b3);
    if (A.is_one()) return std::nullopt;
    return W("altitude feet on a nil triangle are not thin")
        .with("quadrea", A)
        .with("a", a)
        .with("b1", b1)
        .with("b2", b2)
        .with("b3", b3);
  });
}

Verdict check_null_perspective(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Line l12 = join(nu[0], nu[1]), l13 = join(nu[0], nu[2]), l23 = join(nu[1], nu[2]);
    Point b = gen::nonnull_point_on_line(l13, rng);
    std::vector<Point> xy = distinct_points_on(l12, rng, 2);
    Point x1 = meet(l23, join(xy[0], b));
    Point y1 = meet(l23, join(xy[1], b));
    if (is_null(x1) || is_null(y1)) gen::exhausted("non-null images");
    Fq lhs = quadrance(xy[0], xy[1]);
    Fq rhs = quadrance(x1, y1);
    if (lhs == rhs) return std::nullopt;
    return W("perspectivity through a null triangle changed the quadrance")
        .with("q", lhs)
        .with("q_image", rhs)
        .with("x", xy[0])
        .with("y", xy[1])
        .with("b", b);
  });
}

Verdict check_null_subtended(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Line L = join(nu[0], nu[1]);
    Line M = gen::random_line(ctx, rng);
    Line A1 = join(nu[0], nu[2]), A2 = join(nu[1], nu[2]);
    if (M == L || M == A1 || M == A2) gen::exhausted("a transversal");
    Point a1 = meet(A1, M), a2 = meet(A2, M);
    if (is_null(a1) || is_null(a2) || a1 == a2) gen::exhausted("non-null crossings");
    Fq q = quadrance(a1, a2);
    Fq S = spread(L, M);
    Fq r = q * S - Fq::one(ctx);
    if (!r.is_zero())
      return W("subtended quadrance does not invert the spread")
          .with("residual", r)
          .with("q", q)
          .with("S", S)
          .with("L", L)
          .with("M", M)
          .with("alpha3", nu[2]);
    Point nu4 = fresh_null(ctx, rng, nu);
    Line A1b = join(nu[0], nu4), A2b = join(nu[1], nu4);
    if (M == A1b || M == A2b) gen::exhausted("a transversal");
    Point a1b = meet(A1b, M), a2b = meet(A2b, M);
    if (is_null(a1b) || is_null(a2b) || a1b == a2b) gen::exhausted("non-null crossings");
    if (quadrance(a1b, a2b) != q)
      return W("subtended quadrance depends on the third null point")
          .with("q", q)
          .with("q_other", quadrance(a1b, a2b))
          .with("alpha3", nu[2])
          .with("alpha3_other", nu4);
    return std::nullopt;
  });
}

Verdict check_null_subtended_dual(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Line T1 = dual(nu[0]), T2 = dual(nu[1]), T3 = dual(nu[2]);
    Point l = meet(T1, T2);
    Point m = gen::random_point(ctx, rng);
    Point p1 = meet(T1, T3), p2 = meet(T2, T3);
    if (m == l || m == p1 || m == p2) gen::exhausted("a free point");
    Line A1 = join(p1, m), A2 = join(p2, m);
    if (is_null(A1) || is_null(A2) || A1 == A2) gen::exhausted("non-null joins");
    if (is_null(join(l, m))) gen::exhausted("a non-null base join");
    Fq S = spread(A1, A2);
    Fq q = quadrance(l, m);
    Fq r = S * q - Fq::one(ctx);
    if (r.is_zero()) return std::nullopt;
    return W("dual subtended spread does not invert the quadrance")
        .with("residual", r)
        .with("S", S)
        .with("q", q)
        .with("l", l)
        .with("m", m);
  });
}

Verdict check_opposite_subtended(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 6);
    Line gd = join(nu[2], nu[3]), ab = join(nu[0], nu[1]);
    Point a = meet(join(nu[0], nu[4]), gd);
    Point b = meet(join(nu[1], nu[4]), gd);
    Point c = meet(join(nu[2], nu[5]), ab);
    Point d = meet(join(nu[3], nu[5]), ab);
    if (is_null(a) || is_null(b) || is_null(c) || is_null(d)) gen::exhausted("non-null meets");
    Fq lhs = quadrance(a, b), rhs = quadrance(c, d);
    if (lhs == rhs) return std::nullopt;
    return W("opposite subtended quadrances differ")
        .with("q_ab", lhs)
        .with("q_cd", rhs)
        .with("a", a)
        .with("b", b)
        .with("c", c)
        .with("d", d);
  });
}

Verdict check_butterfly_quadrance(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 4);
    Point g = meet(join(nu[0], nu[2]), join(nu[1], nu[3]));
    if (is_null(g)) gen::exhausted("a non-null diagonal point");
    Point r = gen::random_point(ctx, rng);
    if (r == g) gen::exhausted("a second point");
    Line L = join(g, r);
    if (is_null(L)) gen::exhausted("a non-null chord line");
    Line ad = join(nu[0], nu[3]), bg = join(nu[1], nu[2]);
    if (L == ad || L == bg) gen::exhausted("a transversal chord");
    Point x = meet(L, ad), y = meet(L, bg);
    if (is_null(x) || is_null(y)) gen::exhausted("non-null wing points");
    Fq lhs = quadrance(g, x), rhs = quadrance(g, y);
    if (lhs == rhs) return std::nullopt;
    return W("butterfly wing quadrances differ")
        .with("q_gx", lhs)
        .with("q_gy", rhs)
        .with("g", g)
        .with("x", x)
        .with("y", y);
  });
}

Verdict check_butterfly_spread(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 4);
    Point g = meet(join(nu[0], nu[2]), join(nu[1], nu[3]));
    Point r = gen::random_point(ctx, rng);
    if (r == g) gen::exhausted("a second point");
    Line L = join(g, r);
    if (is_null(L)) gen::exhausted("a non-null chord line");
    Line ad = join(nu[0], nu[3]), bg = join(nu[1], nu[2]);
    if (L == ad || L == bg) gen::exhausted("a transversal chord");
    Fq lhs = spread(L, ad), rhs = spread(L, bg);
    if (lhs == rhs) return std::nullopt;
    return W("butterfly wing spreads differ")
        .with("S_ad", lhs)
        .with("S_bg", rhs)
        .with("g", g)
        .with("L", L);
  });
}

Verdict check_theorem_48_64(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 4);
    Fq P = spread(join(nu[0], nu[1]), join(nu[2], nu[3]));
    Fq R = spread(join(nu[0], nu[2]), join(nu[1], nu[3]));
    Fq T = spread(join(nu[0], nu[3]), join(nu[1], nu[2]));
    Fq r1 = P * R + R * T + P * T - Fq(ctx, 48);
    Fq r2 = P * R * T - Fq(ctx, 64);
    if (!r1.is_zero() || !r2.is_zero())
      return W("opposite spreads miss the two constants")
          .with("sum residual", r1)
          .with("product residual", r2)
          .with("P", P)
          .with("R", R)
          .with("T", T);
    if (!P.is_zero() && !R.is_zero() && !T.is_zero()) {
      Fq r3 = reciprocal_sum_residual(P, R, T);
      if (!r3.is_zero())
        return W("reciprocal spread sum misses 3/4")
            .with("residual", r3)
            .with("P", P)
            .with("R", R)
            .with("T", T);
    }
    return std::nullopt;
  });
}

Verdict check_theorem_48_64_dual(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 4);
    Line T1 = dual(nu[0]), T2 = dual(nu[1]), T3 = dual(nu[2]), T4 = dual(nu[3]);
    Fq p = quadrance(meet(T1, T2), meet(T3, T4));
    Fq r = quadrance(meet(T1, T3), meet(T2, T4));
    Fq t = quadrance(meet(T1, T4), meet(T2, T3));
    Fq r1 = p * r + r * t + p * t - Fq(ctx, 48);
    Fq r2 = p * r * t - Fq(ctx, 64);
    if (!r1.is_zero() || !r2.is_zero())
      return W("opposite quadrances miss the two constants")
          .with("sum residual", r1)
          .with("product residual", r2)
          .with("p", p)
          .with("r", r)
          .with("t", t);
    if (!p.is_zero() && !r.is_zero() && !t.is_zero()) {
      Fq r3 = reciprocal_sum_residual(p, r, t);
      if (!r3.is_zero())
        return W("reciprocal quadrance sum misses 3/4")
            .with("residual", r3)
            .with("p", p)
            .with("r", r)
            .with("t", t);
    }
    return std::nullopt;
  });
}

// Diagonal and opposite points shared by the pentagon theorems.
struct PentagonDerived {
  std::array<Point, 5> b;
  std::array<Point, 5> c;
};

PentagonDerived pentagon_derived(const std::array<Point, 5>& a) {
  auto bi = [&a](int i) {
    return meet(join(a[(i + 1) % 5], a[(i + 3) % 5]), join(a[(i + 2) % 5], a[(i + 4) % 5]));
  };
  std::array<Point, 5> b = {bi(0), bi(1), bi(2), bi(3), bi(4)};
  auto ci = [&a, &b](int i) {
    return meet(join(a[i], b[i]), join(a[(i + 1) % 5], a[(i + 4) % 5]));
  };
  return {b, {ci(0), ci(1), ci(2), ci(3), ci(4)}};
}

Verdict check_pentagon_ratio(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 5> a = {gen::random_point(ctx, rng), gen::random_point(ctx, rng),
                              gen::random_point(ctx, rng), gen::random_point(ctx, rng),
                              gen::random_point(ctx, rng)};
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (a[i] == a[j]) gen::exhausted("distinct vertices");
    for (int i = 0; i < 5; ++i)
      if (collinear(a[i], a[(i + 1) % 5], a[(i + 2) % 5]))
        gen::exhausted("no three consecutive vertices collinear");
    PentagonDerived d = pentagon_derived(a);
    Fq lhs = quadrance(d.b[0], d.c[3]) * quadrance(d.b[1], d.c[4]) * quadrance(d.b[2], d.c[0]) *
             quadrance(d.b[3], d.c[1]) * quadrance(d.b[4], d.c[2]);
    Fq rhs = quadrance(d.b[1], d.c[3]) * quadrance(d.b[2], d.c[4]) * quadrance(d.b[3], d.c[0]) *
             quadrance(d.b[4], d.c[1]) * quadrance(d.b[0], d.c[2]);
    if (lhs == rhs) return std::nullopt;
    return W("pentagon quadrance products differ")
        .with("lhs", lhs)
        .with("rhs", rhs)
        .with("a1", a[0])
        .with("a2", a[1])
        .with("a3", a[2])
        .with("a4", a[3])
        .with("a5", a[4]);
  });
}

Verdict check_pentagon_null_product(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nv = gen::distinct_nulls(ctx, rng, 5);
    std::array<Point, 5> a = {nv[0], nv[1], nv[2], nv[3], nv[4]};
    PentagonDerived d = pentagon_derived(a);
    Fq prod = quadrance(d.b[0], d.b[1]) * quadrance(d.b[1], d.b[2]) *
              quadrance(d.b[2], d.b[3]) * quadrance(d.b[3], d.b[4]) *
              quadrance(d.b[4], d.b[0]);
    Fq expected = Fq(ctx, -1) / Fq(ctx, 1024);
    if (prod == expected) return std::nullopt;
    return W("cyclic diagonal quadrance product misses -1/1024")
        .with("product", prod)
        .with("alpha1", a[0])
        .with("alpha2", a[1])
        .with("alpha3", a[2])
        .with("alpha4", a[3])
        .with("alpha5", a[4]);
  });
}

Verdict check_pentagon_null_symmetry(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nv = gen::distinct_nulls(ctx, rng, 6);
    std::array<Point, 5> a = {nv[0], nv[1], nv[2], nv[3], nv[4]};
    PentagonDerived d = pentagon_derived(a);
    const std::array<std::array<int, 4>, 5> eq = {{
        {0, 3, 4, 1},  // q(b1,c4) = q(b5,c2)
        {1, 4, 0, 2},  // q(b2,c5) = q(b1,c3)
        {2, 0, 1, 3},  // q(b3,c1) = q(b2,c4)
        {3, 1, 2, 4},  // q(b4,c2) = q(b3,c5)
        {4, 2, 3, 0},  // q(b5,c3) = q(b4,c1)
    }};
    for (const auto& e : eq) {
      Fq lhs = quadrance(d.b[static_cast<std::size_t>(e[0])], d.c[static_cast<std::size_t>(e[1])]);
      Fq rhs = quadrance(d.b[static_cast<std::size_t>(e[2])], d.c[static_cast<std::size_t>(e[3])]);
      if (lhs != rhs)
        return W("pentagon symmetry equality violated")
            .with("lhs", lhs)
            .with("rhs", rhs)
            .with("alpha1", a[0])
            .with("alpha2", a[1])
            .with("alpha3", a[2])
            .with("alpha4", a[3])
            .with("alpha5", a[4]);
    }
    Fq probe = quadrance(d.b[3], d.c[1]);
    std::array<Point, 5> a2 = {nv[5], nv[1], nv[2], nv[3], nv[4]};
    PentagonDerived d2 = pentagon_derived(a2);
    if (quadrance(d2.b[3], d2.c[1]) != probe)
      return W("q(b4,c2) depends on the first null point")
          .with("q", probe)
          .with("q_other", quadrance(d2.b[3], d2.c[1]))
          .with("alpha1", a[0])
          .with("alpha1_other", nv[5]);
    return std::nullopt;
  });
}

Verdict check_septagon_conic_ratio(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    auto [p, conic] = gen::septagon_conic(ctx, rng);
    (void)conic;
    auto bi = [&p](int i) {
      return meet(join(p[(i + 2) % 7], p[(i + 4) % 7]), join(p[(i + 3) % 7], p[(i + 5) % 7]));
    };
    std::array<Point, 7> b = {bi(0), bi(1), bi(2), bi(3), bi(4), bi(5), bi(6)};
    auto ci = [&p, &b](int i) {
      return meet(join(p[i], b[i]), join(p[(i + 6) % 7], p[(i + 1) % 7]));
    };
    std::array<Point, 7> c = {ci(0), ci(1), ci(2), ci(3), ci(4), ci(5), ci(6)};
    Fq lhs = Fq::one(ctx), rhs = Fq::one(ctx);
    for (int i = 0; i < 7; ++i) {
      lhs *= quadrance(c[static_cast<std::size_t>(i)], b[static_cast<std::size_t>((i + 4) % 7)]);
      rhs *= quadrance(c[static_cast<std::size_t>(i)], b[static_cast<std::size_t>((i + 3) % 7)]);
    }
    if (lhs == rhs) return std::nullopt;
    W w("septagon conic quadrance products differ");
    w.with("lhs", lhs).with("rhs", rhs);
    for (int i = 0; i < 7; ++i)
      w.with("alpha", p[static_cast<std::size_t>(i)]);
    return w;
  });
}

// ------------------------------------------------------------- incidence and
// projective checks

Verdict check_pappus(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Line L = gen::random_line(ctx, rng);
    Line M = gen::random_line(ctx, rng);
    if (L == M) gen::exhausted("two lines");
    Point cross = meet(L, M);
    std::vector<Point> a = distinct_points_on(L, rng, 3);
    std::vector<Point> b = distinct_points_on(M, rng, 3);
    for (const Point& p : a)
      if (p == cross) gen::exhausted("points off the common point");
    for (const Point& p : b)
      if (p == cross) gen::exhausted("points off the common point");
    if (pappus_collinear({a[0], a[1], a[2]}, {b[0], b[1], b[2]})) return std::nullopt;
    return W("hexagon cross meets are not collinear")
        .with("a1", a[0])
        .with("a2", a[1])
        .with("a3", a[2])
        .with("b1", b[0])
        .with("b2", b[1])
        .with("b3", b[2]);
  });
}

Verdict check_desargues(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point o = gen::random_point(ctx, rng);
    std::array<Point, 3> a = gen::triangle(ctx, rng);
    if (a[0] == o || a[1] == o || a[2] == o) gen::exhausted("a center off the triangle");
    std::array<Point, 3> b = a;
    for (int i = 0; i < 3; ++i) {
      Line ray = join(o, a[static_cast<std::size_t>(i)]);
      Point bi = gen::point_on_line(ray, rng);
      if (bi == o || bi == a[static_cast<std::size_t>(i)]) gen::exhausted("a proper image point");
      b[static_cast<std::size_t>(i)] = bi;
    }
    if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2] || collinear(b[0], b[1], b[2]))
      gen::exhausted("a proper image triangle");
    if (desargues_collinear(a, b)) return std::nullopt;
    return W("perspective triangles without a perspective axis")
        .with("o", o)
        .with("a1", a[0])
        .with("a2", a[1])
        .with("a3", a[2])
        .with("b1", b[0])
        .with("b2", b[1])
        .with("b3", b[2]);
  });
}

Verdict check_polar_duality(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point a = gen::random_point(ctx, rng);
    Point nu1 = gen::random_null(ctx, rng);
    Line S1 = join(a, nu1);
    if (tangent_line(S1)) gen::exhausted("a first secant");
    std::vector<Point> n1 = null_points_on(S1);
    if (n1.size() != 2) gen::exhausted("a first secant");
    Point nu3 = gen::random_null(ctx, rng);
    if (incident(nu3, S1)) gen::exhausted("a second secant direction");
    Line S2 = join(a, nu3);
    if (tangent_line(S2)) gen::exhausted("a second secant");
    std::vector<Point> n2 = null_points_on(S2);
    if (n2.size() != 2) gen::exhausted("a second secant");
    Point e = meet(join(n1[0], n2[0]), join(n1[1], n2[1]));
    Point f = meet(join(n1[0], n2[1]), join(n1[1], n2[0]));
    if (e == f) gen::exhausted("a proper quadrangle");
    if (join(e, f) == dual(a)) return std::nullopt;
    return W("quadrangle diagonal join is not the polar")
        .with("a", a)
        .with("constructed", join(e, f))
        .with("polar", dual(a));
  });
}

// --------------------------------------------------------- structure checks

Verdict check_orthocenter_duality(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    Line alt1 = altitude_line(Couple(t[0], join(t[1], t[2])));
    Line alt2 = altitude_line(Couple(t[1], join(t[0], t[2])));
    Line alt3 = altitude_line(Couple(t[2], join(t[0], t[1])));
    if (!concurrent(alt1, alt2, alt3))
      return W("altitudes are not concurrent")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    if (alt1 == alt2) gen::exhausted("distinct altitudes");
    Point h = meet(alt1, alt2);
    if (orthocenter(t[0], t[1], t[2]) != h)
      return W("orthocenter disagrees with the altitude meet")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    if (ortholine(dual(t[0]), dual(t[1]), dual(t[2])) != dual(h))
      return W("ortholine of the dual trilateral is not the dual of the orthocenter")
          .with("h", h)
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    return std::nullopt;
  });
}

Verdict check_circumcenter_structure(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::midpoint_triangle(ctx, rng);
    CircumStructure cs = circumcenters(t[0], t[1], t[2]);
    std::array<Point, 6> mids = {cs.midpoints[0].first, cs.midpoints[0].second,
                                 cs.midpoints[1].first, cs.midpoints[1].second,
                                 cs.midpoints[2].first, cs.midpoints[2].second};
    if (cs.circumlines.size() != 4)
      return W("midpoint triple lines do not number four")
          .text("count", std::to_string(cs.circumlines.size()))
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    for (const Line& cl : cs.circumlines) {
      int on = 0;
      for (const Point& mp : mids)
        if (incident(mp, cl)) ++on;
      if (on != 3)
        return W("a circumline does not hold exactly three midpoints")
            .text("incident", std::to_string(on))
            .with("circumline", cl)
            .with("a1", t[0])
            .with("a2", t[1])
            .with("a3", t[2]);
    }
    if (cs.circumcenters.size() != cs.circumlines.size())
      return W("circumcenter count differs from circumline count")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    for (std::size_t i = 0; i < cs.circumlines.size(); ++i) {
      const Point& c = cs.circumcenters[i];
      if (c != dual(cs.circumlines[i]))
        return W("a circumcenter is not the dual of its circumline")
            .with("circumline", cs.circumlines[i])
            .with("center", c);
      if (is_null(c)) gen::exhausted("non-null circumcenters");
      Fq q1 = quadrance(c, t[0]), q2 = quadrance(c, t[1]), q3 = quadrance(c, t[2]);
      if (q1 != q2 || q2 != q3)
        return W("a circumcenter is not equidistant from the vertices")
            .with("center", c)
            .with("q1", q1)
            .with("q2", q2)
            .with("q3", q3);
    }
    return std::nullopt;
  });
}

Verdict check_double_median(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    DoubleTriangle dt = double_triangle(t[0], t[1], t[2]);
    if (reflect_point(dt.d[1], t[0]) != dt.d[2] || reflect_point(dt.d[0], t[1]) != dt.d[2] ||
        reflect_point(dt.d[0], t[2]) != dt.d[1])
      return W("a vertex is not the midpoint of its double side")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2])
          .with("d1", dt.d[0])
          .with("d2", dt.d[1])
          .with("d3", dt.d[2]);
    return std::nullopt;
  });
}

Verdict check_double_points(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::array<Point, 3> t = gen::triangle(ctx, rng);
    DoubleTriangle dt = double_triangle(t[0], t[1], t[2]);
    for (int i = 0; i < 3; ++i)
      if (t[static_cast<std::size_t>(i)] == dt.d[static_cast<std::size_t>(i)])
        gen::exhausted("a proper double triangle");
    Line j1 = join(t[0], dt.d[0]), j2 = join(t[1], dt.d[1]), j3 = join(t[2], dt.d[2]);
    if (!concurrent(j1, j2, j3))
      return W("double joins are not concurrent")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    if (j1 == j2) gen::exhausted("distinct double joins");
    if (double_point(t[0], t[1], t[2]) != meet(j1, j2))
      return W("double point disagrees with the join meet")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    DoubleTriangle gt = double_triangle(dt.d[0], dt.d[1], dt.d[2]);
    for (int i = 0; i < 3; ++i)
      if (t[static_cast<std::size_t>(i)] == gt.d[static_cast<std::size_t>(i)])
        gen::exhausted("a proper twice-doubled triangle");
    Line k1 = join(t[0], gt.d[0]), k2 = join(t[1], gt.d[1]), k3 = join(t[2], gt.d[2]);
    if (!concurrent(k1, k2, k3))
      return W("twice-doubled joins are not concurrent")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    if (k1 == k2) gen::exhausted("distinct twice-doubled joins");
    if (second_double_point(t[0], t[1], t[2]) != meet(k1, k2))
      return W("second double point disagrees with the join meet")
          .with("a1", t[0])
          .with("a2", t[1])
          .with("a3", t[2]);
    return std::nullopt;
  });
}

Verdict check_reflection_isometry(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    Point m = gen::random_point(ctx, rng);
    Point x = gen::random_point(ctx, rng);
    Point y = gen::random_point(ctx, rng);
    if (x == y) gen::exhausted("two points");
    Point x2 = reflect_point(x, m), y2 = reflect_point(y, m);
    if (reflect_point(x2, m) != x)
      return W("point reflection is not an involution").with("m", m).with("x", x);
    if (quadrance(x, y) != quadrance(x2, y2))
      return W("point reflection changed a quadrance")
          .with("m", m)
          .with("x", x)
          .with("y", y)
          .with("q", quadrance(x, y))
          .with("q_image", quadrance(x2, y2));
    Line L = gen::random_line(ctx, rng);
    Line M2 = gen::random_line(ctx, rng);
    Line Lr = reflect_line(L, m), Mr = reflect_line(M2, m);
    if (reflect_line(Lr, m) != L)
      return W("line reflection is not an involution").with("m", m).with("L", L);
    if (spread(L, M2) != spread(Lr, Mr))
      return W("point reflection changed a spread")
          .with("m", m)
          .with("L", L)
          .with("M", M2)
          .with("S", spread(L, M2))
          .with("S_image", spread(Lr, Mr));
    if (incident(x, L) != incident(x2, Lr))
      return W("point reflection broke an incidence").with("m", m).with("x", x).with("L", L);
    if (reflect_point_in_line(x, dual(m)) != x2 || reflect_line_in_line(L, dual(m)) != Lr)
      return W("reflection through the dual mirror path disagrees")
          .with("m", m)
          .with("x", x)
          .with("L", L);
    return std::nullopt;
  });
}

Verdict check_midpoint_symmetry(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    gen::SideWithMidpoints s = gen::midpoint_side(ctx, rng);
    auto mids = midpoints(Side(s.b, s.c));
    if (!mids)
      return W("midpoints absent on a side built from two secants")
          .with("b", s.b)
          .with("c", s.c)
          .with("M", s.M)
          .with("N", s.N);
    bool set_eq = (mids->first == s.d && mids->second == s.e) ||
                  (mids->first == s.e && mids->second == s.d);
    if (!set_eq)
      return W("midpoints disagree with the quadrangle diagonal points")
          .with("b", s.b)
          .with("c", s.c)
          .with("first", mids->first)
          .with("second", mids->second)
          .with("d", s.d)
          .with("e", s.e);
    for (const Point& mp : {mids->first, mids->second}) {
      if (reflect_point(s.b, mp) != s.c)
        return W("midpoint reflection does not swap the side")
            .with("midpoint", mp)
            .with("b", s.b)
            .with("c", s.c);
      if (quadrance(s.b, mp) != quadrance(mp, s.c))
        return W("midpoint does not equalize quadrances")
            .with("midpoint", mp)
            .with("b", s.b)
            .with("c", s.c);
    }
    auto mls = midlines(Side(s.b, s.c));
    if (!mls || mls->first != dual(mids->first) || mls->second != dual(mids->second))
      return W("midlines are not the duals of the midpoints").with("b", s.b).with("c", s.c);
    Vertex v(dual(s.b), dual(s.c));
    auto bp = bipoints(v);
    if (!bp)
      return W("bipoints absent for the dual vertex").with("b", s.b).with("c", s.c);
    bool bp_eq = (bp->first == mids->first && bp->second == mids->second) ||
                 (bp->first == mids->second && bp->second == mids->first);
    if (!bp_eq)
      return W("bipoints of the dual vertex differ from the midpoints")
          .with("b", s.b)
          .with("c", s.c);
    return std::nullopt;
  });
}

// ------------------------------------------------------------- curve checks

Verdict check_canonical_points(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Line sec = join(nu[0], nu[1]);
    std::vector<Point> xy = distinct_points_on(sec, rng, 2);
    const Point &x3 = xy[0], &y3 = xy[1];
    std::vector<Point> nn = null_points_on(sec);
    if (nn.size() != 2) gen::exhausted("a secant base");
    Point b1 = gen::nonnull_point_on_line(join(nn[1], nu[2]), rng);
    Point b2 = gen::nonnull_point_on_line(join(nn[0], nu[2]), rng);
    CanonicalPoints cp = canonical_points(x3, y3, nu[2], b1, b2);
    if (!incident(cp.b3, sec))
      return W("third base point misses the base secant")
          .with("b3", cp.b3)
          .with("x3", x3)
          .with("y3", y3);
    if (!collinear(b1, cp.z2, cp.w3) || !collinear(b2, cp.z3, cp.w1) ||
        !collinear(cp.b3, cp.z1, cp.w2))
      return W("canonical collinearity violated")
          .with("x3", x3)
          .with("y3", y3)
          .with("b1", b1)
          .with("b2", b2);
    Point alt = fresh_null(ctx, rng, {nn[0], nn[1], nu[2]});
    Point c1 = gen::nonnull_point_on_line(join(nn[1], alt), rng);
    Point c2 = gen::nonnull_point_on_line(join(nn[0], alt), rng);
    CanonicalPoints cp2 = canonical_points(x3, y3, alt, c1, c2);
    if (cp2.z3 != cp.z3 || cp2.w3 != cp.w3)
      return W("canonical pair depends on the auxiliary choices")
          .with("z3", cp.z3)
          .with("w3", cp.w3)
          .with("z3_other", cp2.z3)
          .with("w3_other", cp2.w3);
    return std::nullopt;
  });
}

Verdict check_canonical_cubic(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nu = gen::distinct_nulls(ctx, rng, 3);
    Line sec = join(nu[0], nu[1]);
    std::vector<Point> xy = distinct_points_on(sec, rng, 2);
    const Point &x3 = xy[0], &y3 = xy[1];
    std::vector<Point> nn = null_points_on(sec);
    if (nn.size() != 2) gen::exhausted("a secant base");
    Point b1 = gen::nonnull_point_on_line(join(nn[1], nu[2]), rng);
    Point b2 = gen::nonnull_point_on_line(join(nn[0], nu[2]), rng);
    CanonicalPoints cp = canonical_points(x3, y3, nu[2], b1, b2);
    Fq q = quadrance(x3, y3);
    Fq r = quadrance(x3, cp.z3);
    Fq res = canonical_cubic_residual(q, r);
    if (!res.is_zero())
      return W("canonical cubic residual nonzero")
          .with("residual", res)
          .with("q", q)
          .with("r", r)
          .with("x3", x3)
          .with("y3", y3);
    Fq rp = quadrance(cp.z3, cp.w3);
    Fq res2 = q * q - Fq(ctx, 4) * rp * (q - Fq::one(ctx));
    if (!res2.is_zero())
      return W("canonical pair quadrance relation violated")
          .with("residual", res2)
          .with("q", q)
          .with("r_pair", rp)
          .with("x3", x3)
          .with("y3", y3);
    if (quadrance(x3, cp.z3) != quadrance(y3, cp.w3) ||
        quadrance(x3, cp.w3) != quadrance(y3, cp.z3))
      return W("canonical cross quadrances are not symmetric")
          .with("x3", x3)
          .with("y3", y3)
          .with("z3", cp.z3)
          .with("w3", cp.w3);
    return std::nullopt;
  });
}

Verdict check_jumping_jack(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    std::vector<Point> nv = gen::distinct_nulls(ctx, rng, 5);
    std::array<Point, 5> alpha = {nv[0], nv[1], nv[2], nv[3], nv[4]};
    Point g = meet(join(nv[0], nv[2]), join(nv[1], nv[3]));
    Point r = gen::random_point(ctx, rng);
    if (r == g) gen::exhausted("a line direction");
    Line L = join(g, r);
    JumpingJack jj = jumping_jack(alpha, L);
    Fq res = jumping_jack_residual(jj.r, jj.s);
    if (res.is_zero()) return std::nullopt;
    return W("jumping jack residual nonzero")
        .with("residual", res)
        .with("r", jj.r)
        .with("s", jj.s)
        .with("L", L)
        .with("alpha5", nv[4]);
  });
}

struct ParabolaInstance {
  Point f1, b1;
  Line D1;
  ParabolaPoints pp;
};

ParabolaInstance parabola_instance(const FieldCtx& ctx, Rng& rng) {
  gen::SideWithMidpoints s = gen::midpoint_side(ctx, rng);
  Point f1 = s.b;
  Point b1 = s.c;
  Point r = gen::random_point(ctx, rng);
  if (r == b1) gen::exhausted("a directrix direction");
  Line D1 = join(b1, r);
  if (is_null(D1) || incident(f1, D1) || dual(D1) == f1) gen::exhausted("a directrix");
  ParabolaPoints pp = parabola_points(f1, D1, b1);
  return {f1, b1, D1, pp};
}

Verdict check_parabola(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    ParabolaInstance ins = parabola_instance(ctx, rng);
    Point f2 = dual(ins.D1);
    Line D2 = dual(ins.f1);
    Fq one = Fq::one(ctx);
    for (const Point& a : ins.pp.points) {
      Fq res = parabola_locus_residual(ins.f1, ins.D1, a);
      if (!res.is_zero())
        return W("parabola point misses the focus-directrix locus")
            .with("residual", res)
            .with("a", a)
            .with("f1", ins.f1)
            .with("D1", ins.D1);
      Fq res2 = parabola_locus_residual(f2, D2, a);
      if (!res2.is_zero())
        return W("parabola point misses the paired focus-directrix locus")
            .with("residual", res2)
            .with("a", a)
            .with("f2", f2)
            .with("D2", D2);
      Fq sum = quadrance(a, ins.f1) + quadrance(a, f2) - one;
      if (!sum.is_zero())
        return W("focal quadrances do not sum to one")
            .with("residual", sum)
            .with("a", a)
            .with("f1", ins.f1)
            .with("f2", f2);
    }
    Point b2 = dual(join(ins.b1, ins.f1));
    if (!incident(b2, ins.pp.tangents[0]) || !incident(b2, ins.pp.tangents[1]))
      return W("tangents do not meet at the dual of the base join")
          .with("b2", b2)
          .with("t1", ins.pp.tangents[0])
          .with("t2", ins.pp.tangents[1]);
    try {
      ParabolaPoints pp2 = parabola_points(f2, D2, b2);
      if (!incident(ins.b1, pp2.tangents[0]) || !incident(ins.b1, pp2.tangents[1]))
        return W("paired tangents do not meet at the original base point")
            .with("b1", ins.b1)
            .with("t1", pp2.tangents[0])
            .with("t2", pp2.tangents[1]);
      // The perpendicular pairing between the two point pairs holds only on
      // some instances, so it is probed in the unit tests on a frozen
      // instance rather than asserted here.
    } catch (const Error&) {
      // The paired construction needs its own midlines; skip the probe when
      // the field does not provide them.
    }
    return std::nullopt;
  });
}

Verdict check_parabola_chords(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    ParabolaInstance ins = parabola_instance(ctx, rng);
    const Point &a = ins.pp.points[0], &b = ins.pp.points[1];
    const Line &Ta = ins.pp.tangents[0], &Tb = ins.pp.tangents[1];
    if (a == b || Ta == Tb) gen::exhausted("a proper chord");
    if (Ta == ins.D1 || Tb == ins.D1) gen::exhausted("tangents apart from the directrix");
    Point c = meet(ins.D1, Ta), d = meet(ins.D1, Tb);
    if (c == ins.f1 || d == ins.f1 || a == ins.f1 || b == ins.f1)
      gen::exhausted("points apart from the focus");
    Fq lhs = spread(join(c, ins.f1), join(ins.f1, d));
    Fq rhs = spread(join(a, ins.f1), join(ins.f1, b));
    if (lhs != rhs)
      return W("directrix chord spread differs from the focal chord spread")
          .with("S_cd", lhs)
          .with("S_ab", rhs)
          .with("a", a)
          .with("b", b)
          .with("c", c)
          .with("d", d);
    Line ab = join(a, b);
    if (ab == ins.D1) gen::exhausted("a chord apart from the directrix");
    Point e = meet(ins.D1, ab);
    Point gpt = meet(Ta, Tb);
    if (e == ins.f1 || gpt == ins.f1) gen::exhausted("meets apart from the focus");
    if (!perpendicular(join(e, ins.f1), join(gpt, ins.f1)))
      return W("chord meet and tangent meet are not perpendicular through the focus")
          .with("e", e)
          .with("g", gpt)
          .with("f1", ins.f1);
    return std::nullopt;
  });
}

Verdict check_bolyai(const FieldCtx& ctx, Rng& rng) {
  return retrying([&]() -> Verdict {
    gen::SideWithMidpoints s = gen::midpoint_side(ctx, rng);
    Point a = s.b;
    Line L = s.N;
    LimitingLines ll = bolyai_limiting_lines(a, L);
    std::vector<Point> nn = null_points_on(L);
    if (nn.size() != 2)
      return W("secant lost its null points").with("L", L).with("a", a);
    Line U1 = join(a, nn[0]);
    Line U2 = join(a, nn[1]);
    bool set_eq = (ll.U == U1 && ll.V == U2) || (ll.U == U2 && ll.V == U1);
    if (!set_eq)
      return W("limiting lines differ from the joins to the null points")
          .with("U", ll.U)
          .with("V", ll.V)
          .with("expected1", U1)
          .with("expected2", U2);
    if (!incident(ll.u, ll.U) || !incident(ll.v, ll.V))
      return W("limiting construction points are off their lines")
          .with("u", ll.u)
          .with("v", ll.v);
    return std::nullopt;
  });
}

// ------------------------------------------------------------------ registry

struct Entry {
  const char* id;
  CheckFn fn;
};

constexpr Entry kRegistry[] = {
    {"triple_quad", check_triple_quad},
    {"triple_spread", check_triple_spread},
    {"pythagoras", check_pythagoras},
    {"pythagoras_dual", check_pythagoras_dual},
    {"thales", check_thales},
    {"right_parallax", check_right_parallax},
    {"napier_rules", check_napier_rules},
    {"spread_law", check_spread_law},
    {"cross_law", check_cross_law},
    {"cross_law_dual", check_cross_law_dual},
    {"quadrance_cross_ratio", check_quadrance_cross_ratio},
    {"spread_cross_ratio", check_spread_cross_ratio},
    {"quadrance_signs", check_quadrance_signs},
    {"pons_asinorum", check_pons_asinorum},
    {"isosceles", check_isosceles},
    {"isosceles_right", check_isosceles_right},
    {"isosceles_parallax", check_isosceles_parallax},
    {"equilateral", check_equilateral},
    {"triangle_proportions", check_triangle_proportions},
    {"menelaus", check_menelaus},
    {"ceva", check_ceva},
    {"menelaus_dual", check_menelaus_dual},
    {"ceva_dual", check_ceva_dual},
    {"lambert", check_lambert},
    {"triply_nil_altitudes", check_triply_nil_altitudes},
    {"nil_quadrangle_diagonal", check_nil_quadrangle_diagonal},
    {"cevian_thinness", check_cevian_thinness},
    {"altitude_thinness", check_altitude_thinness},
    {"null_perspective", check_null_perspective},
    {"null_subtended", check_null_subtended},
    {"null_subtended_dual", check_null_subtended_dual},
    {"opposite_subtended", check_opposite_subtended},
    {"butterfly_quadrance", check_butterfly_quadrance},
    {"butterfly_spread", check_butterfly_spread},
    {"theorem_48_64", check_theorem_48_64},
    {"theorem_48_64_dual", check_theorem_48_64_dual},
    {"pentagon_ratio", check_pentagon_ratio},
    {"pentagon_null_product", check_pentagon_null_product},
    {"pentagon_null_symmetry", check_pentagon_null_symmetry},
    {"septagon_conic_ratio", check_septagon_conic_ratio},
    {"pappus", check_pappus},
    {"desargues", check_desargues},
    {"polar_duality", check_polar_duality},
    {"orthocenter_duality", check_orthocenter_duality},
    {"circumcenter_structure", check_circumcenter_structure},
    {"double_median", check_double_median},
    {"double_points", check_double_points},
    {"reflection_isometry", check_reflection_isometry},
    {"midpoint_symmetry", check_midpoint_symmetry},
    {"canonical_points", check_canonical_points},
    {"canonical_cubic", check_canonical_cubic},
    {"jumping_jack", check_jumping_jack},
    {"parabola", check_parabola},
    {"parabola_chords", check_parabola_chords},
    {"bolyai", check_bolyai},
};

const Entry* find_entry(const std::string& id) {
  for (const Entry& e : kRegistry)
    if (id == e.id) return &e;
  return nullptr;
}

}  // namespace

std::string CheckReport::summary_line() const {
  std::ostringstream os;
  os << theorem << '\t' << trials << '\t' << passes << '\t' << skips << '\t' << failures;
  return os.str();
}

std::string CheckReport::str() const {
  std::string out = summary_line();
  for (const std::string& w : witnesses) {
    out += '\n';
    out += w;
  }
  return out;
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  out.reserve(std::size(kRegistry));
  for (const Entry& e : kRegistry) out.emplace_back(e.id);
  return out;
}

bool has_theorem(const std::string& id) { return find_entry(id) != nullptr; }

CheckReport run_check(const std::string& id, int trials, std::uint64_t seed, const FieldCtx& ctx) {
  const Entry* entry = find_entry(id);
  if (!entry) fail(Err::UnknownTheorem, "unknown theorem id: " + id);
  if (trials < 1) fail(Err::Inconsistent, "trials must be at least 1");
  std::vector<signed char> status(static_cast<std::size_t>(trials), 0);
  std::vector<std::string> found(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  std::mutex emu;
  std::exception_ptr eptr;
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= trials) return;
      auto idx = static_cast<std::size_t>(i);
      try {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
        if (Verdict v = entry->fn(ctx, rng)) {
          status[idx] = 2;
          found[idx] = std::move(*v);
        }
      } catch (const Error&) {
        status[idx] = 1;
      } catch (...) {
        std::lock_guard<std::mutex> lock(emu);
        if (!eptr) eptr = std::current_exception();
        return;
      }
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = hw ? std::min(hw, 8u) : 1u;
  if (trials < 64) workers = 1;
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (eptr) std::rethrow_exception(eptr);
  CheckReport rep;
  rep.theorem = id;
  rep.field = ctx.str();
  rep.seed = seed;
  rep.trials = trials;
  for (int i = 0; i < trials; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (status[idx] == 0) {
      ++rep.passes;
    } else if (status[idx] == 1) {
      ++rep.skips;
    } else {
      ++rep.failures;
      rep.witnesses.push_back("trial " + std::to_string(i) + ": " + found[idx]);
    }
  }
  return rep;
}

}  // namespace uhg
