#include "uhg/generators.hpp"

#include <algorithm>
#include <sstream>

#include "uhg/constructions.hpp"

namespace uhg {

namespace {

const Binding* find_binding(const Configuration& cfg, const std::string& name) {
  for (const auto& b : cfg.bindings)
    if (b.first == name) return &b.second;
  return nullptr;
}

}  // namespace

const Point& Configuration::point(const std::string& name) const {
  if (const Binding* b = find_binding(*this, name))
    if (const Point* p = std::get_if<Point>(b)) return *p;
  fail(Err::Inconsistent, "configuration has no point binding named " + name);
}

const Line& Configuration::line(const std::string& name) const {
  if (const Binding* b = find_binding(*this, name))
    if (const Line* l = std::get_if<Line>(b)) return *l;
  fail(Err::Inconsistent, "configuration has no line binding named " + name);
}

const Fq& Configuration::scalar(const std::string& name) const {
  if (const Binding* b = find_binding(*this, name))
    if (const Fq* v = std::get_if<Fq>(b)) return *v;
  fail(Err::Inconsistent, "configuration has no scalar binding named " + name);
}

std::string Configuration::str() const {
  std::ostringstream os;
  os << generator << " seed=" << seed;
  for (const auto& b : bindings) {
    os << "\n  " << b.first << " = ";
    std::visit([&os](const auto& v) { os << v.str(); }, b.second);
  }
  return os.str();
}

std::vector<std::string> generator_ids() {
  return {"point",         "line",           "triangle",
          "right_triangle", "null_quadrangle", "null_pentagon",
          "null_septagon",  "septagon_conic",  "midpoint_triangle"};
}

Configuration generate(const std::string& kind, const FieldCtx& ctx, std::uint64_t seed) {
  Rng rng(seed);
  Configuration cfg{kind, seed, {}};
  if (kind == "point") {
    cfg.bind("a", gen::random_point(ctx, rng));
  } else if (kind == "line") {
    cfg.bind("L", gen::random_line(ctx, rng));
  } else if (kind == "triangle" || kind == "right_triangle" || kind == "midpoint_triangle") {
    std::array<Point, 3> t = kind == "triangle"         ? gen::triangle(ctx, rng)
                             : kind == "right_triangle" ? gen::right_triangle(ctx, rng)
                                                        : gen::midpoint_triangle(ctx, rng);
    cfg.bind("a1", t[0]);
    cfg.bind("a2", t[1]);
    cfg.bind("a3", t[2]);
  } else if (kind == "null_quadrangle" || kind == "null_pentagon" || kind == "null_septagon") {
    int n = kind == "null_quadrangle" ? 4 : kind == "null_pentagon" ? 5 : 7;
    std::vector<Point> nulls = gen::distinct_nulls(ctx, rng, n);
    for (int i = 0; i < n; ++i) cfg.bind("alpha" + std::to_string(i + 1), nulls[i]);
  } else if (kind == "septagon_conic") {
    auto [pts, conic] = gen::septagon_conic(ctx, rng);
    for (int i = 0; i < 7; ++i) cfg.bind("alpha" + std::to_string(i + 1), pts[i]);
    for (int i = 0; i < 6; ++i) cfg.bind("c" + std::to_string(i), conic[i]);
  } else {
    fail(Err::UnknownGenerator, "unknown generator id: " + kind);
  }
  return cfg;
}

namespace gen {

void exhausted(const char* what) {
  fail(Err::GeneratorExhausted, std::string("could not generate ") + what);
}

Fq scalar(const FieldCtx& ctx, Rng& rng) { return rng.scalar(ctx); }

Point random_point(const FieldCtx& ctx, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    Fq x = rng.scalar(ctx), y = rng.scalar(ctx), z = rng.scalar(ctx);
    if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
    Point p(x, y, z);
    if (!is_null(p)) return p;
  }
  exhausted("a non-null point");
}

Line random_line(const FieldCtx& ctx, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    Fq a = rng.scalar(ctx), b = rng.scalar(ctx), c = rng.scalar(ctx);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    Line l(a, b, c);
    if (!is_null(l)) return l;
  }
  exhausted("a non-null line");
}

Point random_null(const FieldCtx& ctx, Rng& rng) {
  if (rng.chance(16)) return null_point(ExtValue::infinity(ctx));
  return null_point(rng.scalar(ctx));
}

std::vector<Point> distinct_nulls(const FieldCtx& ctx, Rng& rng, int n) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  int budget = kMaxRejects * n;
  while (static_cast<int>(out.size()) < n && budget-- > 0) {
    Point p = random_null(ctx, rng);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (static_cast<int>(out.size()) < n) exhausted("distinct null points");
  return out;
}

Point point_on_line(const Line& l, Rng& rng) {
  auto [p, q] = span_points(l);
  const FieldCtx& ctx = l.ctx();
  for (;;) {
    Fq s = rng.scalar(ctx), t = rng.scalar(ctx);
    if (s.is_zero() && t.is_zero()) continue;
    return Point(s * p.x() + t * q.x(), s * p.y() + t * q.y(), s * p.z() + t * q.z());
  }
}

Point nonnull_point_on_line(const Line& l, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    Point p = point_on_line(l, rng);
    if (!is_null(p)) return p;
  }
  exhausted("a non-null point on a line");
}

std::array<Point, 3> triangle(const FieldCtx& ctx, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    Point a1 = random_point(ctx, rng);
    Point a2 = random_point(ctx, rng);
    Point a3 = random_point(ctx, rng);
    if (a1 == a2 || a1 == a3 || a2 == a3) continue;
    if (collinear(a1, a2, a3)) continue;
    if (is_null(join(a2, a3)) || is_null(join(a1, a3)) || is_null(join(a1, a2))) continue;
    return {a1, a2, a3};
  }
  exhausted("a triangle");
}

std::array<Point, 3> right_triangle(const FieldCtx& ctx, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    Point a3 = random_point(ctx, rng);
    Point r = random_point(ctx, rng);
    if (r == a3) continue;
    Line l1 = join(a3, r);
    if (is_null(l1)) continue;
    Point pole = dual(l1);
    if (pole == a3) continue;
    Line l2 = join(a3, pole);
    if (is_null(l2)) continue;
    Point a1 = nonnull_point_on_line(l1, rng);
    Point a2 = nonnull_point_on_line(l2, rng);
    if (a1 == a3 || a2 == a3 || a1 == a2) continue;
    if (is_null(join(a1, a2))) continue;
    return {a1, a2, a3};
  }
  exhausted("a right triangle");
}

std::array<Point, 3> isosceles_triangle(const FieldCtx& ctx, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    SideWithMidpoints s = midpoint_side(ctx, rng);
    Line axis = dual(s.d);
    Point apex = nonnull_point_on_line(axis, rng);
    if (apex == s.b || apex == s.c) continue;
    if (incident(apex, join(s.b, s.c))) continue;
    if (is_null(join(apex, s.b)) || is_null(join(apex, s.c))) continue;
    return {s.b, s.c, apex};
  }
  exhausted("an isosceles triangle");
}

std::array<Point, 3> equilateral_triangle(const FieldCtx& ctx, Rng& rng) {
  const Fq one = Fq::one(ctx);
  const Fq three(ctx, 3);
  for (int i = 0; i < kMaxRejects; ++i) {
    Fq mu1(ctx, rng.range(-8, 8)), mu2(ctx, rng.range(-8, 8)), mu3(ctx, rng.range(-8, 8));
    Fq den = mu1 * mu1 - three * mu2 * mu2 - mu3 * mu3;
    if (den.is_zero()) continue;
    Fq lam = Fq(ctx, -2) * (mu1 - three * mu2 - mu3) / den;
    if (lam.is_zero()) continue;
    Fq p = one + lam * mu1, s = one + lam * mu2, v = one + lam * mu3;
    if (p.is_zero()) continue;
    Fq E = s * s - p * p - one;
    Fq F = p * p + s * s - one;
    if (E.is_zero() || F.is_zero()) continue;
    Fq A = E * E - F * s * s;
    Fq B = F * s;
    Fq C = -(E * E + F);
    Fq t = Fq::zero(ctx);
    if (A.is_zero()) {
      if (B.is_zero()) continue;
      t = -C / (B + B);
    } else {
      Fq root = E * p * v;
      t = (rng.chance(2) ? -B + root : -B - root) / A;
    }
    Point a1(p, s, one), a2(-p, s, one), a3(Fq::zero(ctx), t, one);
    if (a1 == a3 || a2 == a3) continue;
    try {
      TriangleMetrics m = triangle_metrics(a1, a2, a3);
      if (m.q[0] == m.q[1] && m.q[1] == m.q[2] && m.S[0] == m.S[1] && m.S[1] == m.S[2])
        return {a1, a2, a3};
    } catch (const Error&) {
    }
  }
  // The affine family above misses some small fields entirely; scan the plane.
  if (ctx.is_prime() && ctx.modulus() <= 13) {
    long p = ctx.modulus().get_si();
    std::vector<Point> pts;
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y) pts.emplace_back(ctx, x, y, 1);
    for (long y = 0; y < p; ++y) pts.emplace_back(ctx, 1, y, 0);
    pts.emplace_back(ctx, 0, 1, 0);
    for (std::size_t i = pts.size(); i > 1; --i)
      std::swap(pts[i - 1], pts[rng.below(i)]);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          try {
            TriangleMetrics m = triangle_metrics(pts[i], pts[j], pts[k]);
            if (m.q[0] == m.q[1] && m.q[1] == m.q[2] && m.S[0] == m.S[1] && m.S[1] == m.S[2])
              return {pts[i], pts[j], pts[k]};
          } catch (const Error&) {
          }
        }
  }
  exhausted("an equilateral triangle");
}

SideWithMidpoints midpoint_side(const FieldCtx& ctx, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    std::vector<Point> nu = distinct_nulls(ctx, rng, 4);
    Line M = join(nu[0], nu[1]);
    Line N = join(nu[2], nu[3]);
    if (M == N) continue;
    Point f = meet(M, N);
    if (is_null(f)) continue;
    Line L = dual(f);
    Point b = meet(M, L);
    Point c = meet(N, L);
    if (is_null(b) || is_null(c) || b == c) continue;
    Point d = meet(join(nu[0], nu[2]), join(nu[1], nu[3]));
    Point e = meet(join(nu[0], nu[3]), join(nu[1], nu[2]));
    if (d == e || is_null(d) || is_null(e)) continue;
    if (!incident(d, L) || !incident(e, L)) continue;
    if (reflect_point(b, d) != c || reflect_point(b, e) != c) continue;
    return {b, c, d, e, M, N};
  }
  exhausted("a side with midpoints");
}

namespace {

// Triangles over the rationals all of whose sides admit midpoints; random
// point reflections (exact isometries of the null circle) spread each base
// over an orbit while preserving midpoint existence.
const std::vector<std::array<long, 9>>& rational_midpoint_bases() {
  static const std::vector<std::array<long, 9>> table = {
      {0, 0, 1, 3, 0, 5, 12, 9, 25},
      {0, 0, 1, 0, 3, 5, 9, 12, 25},
      {0, 0, 1, 3, 0, -5, 12, -9, -25},
      {0, 0, 1, 0, 3, 5, 9, -12, -25},
  };
  return table;
}

std::optional<std::array<Point, 3>> midpoint_triangle_attempt(const FieldCtx& ctx, Rng& rng) {
  std::vector<Point> nu = distinct_nulls(ctx, rng, 6);
  Line M = join(nu[0], nu[1]);
  Line N = join(nu[2], nu[3]);
  if (M == N) return std::nullopt;
  Point f3 = meet(M, N);
  if (is_null(f3)) return std::nullopt;
  Line L3 = dual(f3);
  Point a1 = meet(M, L3);
  Point a2 = meet(N, L3);
  if (is_null(a1) || is_null(a2) || a1 == a2) return std::nullopt;
  Line P = join(a1, nu[4]);
  if (P == L3 || tangent_line(P)) return std::nullopt;
  Point w = meet(P, dual(a1));
  if (is_null(w) || w == f3) return std::nullopt;
  Line L2 = dual(w);
  Line Q = join(w, nu[5]);
  if (Q == P || tangent_line(Q)) return std::nullopt;
  Point a3 = meet(Q, L2);
  if (is_null(a3) || a3 == a1 || a3 == a2) return std::nullopt;
  if (collinear(a1, a2, a3)) return std::nullopt;
  if (is_null(join(a2, a3))) return std::nullopt;
  if (!midpoints(Side(a1, a2)) || !midpoints(Side(a1, a3)) || !midpoints(Side(a2, a3)))
    return std::nullopt;
  return std::array<Point, 3>{a1, a2, a3};
}

}  // namespace

std::array<Point, 3> midpoint_triangle(const FieldCtx& ctx, Rng& rng) {
  if (ctx.is_rational() && !rational_midpoint_bases().empty()) {
    const auto& table = rational_midpoint_bases();
    for (int i = 0; i < kMaxRejects; ++i) {
      const auto& row = table[rng.below(table.size())];
      std::array<Point, 3> t{Point(ctx, row[0], row[1], row[2]),
                             Point(ctx, row[3], row[4], row[5]),
                             Point(ctx, row[6], row[7], row[8])};
      int flips = 1 + static_cast<int>(rng.below(3));
      for (int k = 0; k < flips; ++k) {
        Point m = random_point(ctx, rng);
        t = {reflect_point(t[0], m), reflect_point(t[1], m), reflect_point(t[2], m)};
      }
      if (!midpoints(Side(t[0], t[1])) || !midpoints(Side(t[0], t[2])) ||
          !midpoints(Side(t[1], t[2])))
        continue;
      return t;
    }
    exhausted("a midpoint triangle");
  }
  for (int i = 0; i < kMaxRejects; ++i) {
    if (auto t = midpoint_triangle_attempt(ctx, rng)) return *t;
  }
  exhausted("a midpoint triangle");
}

std::array<Point, 4> lambert_quadrilateral(const FieldCtx& ctx, Rng& rng) {
  for (int i = 0; i < kMaxRejects; ++i) {
    Point b = random_point(ctx, rng);
    Point r = random_point(ctx, rng);
    if (r == b) continue;
    Line M = join(b, r);
    if (is_null(M) || dual(M) == b) continue;
    Line N = join(b, dual(M));
    if (is_null(N)) continue;
    Point a = nonnull_point_on_line(M, rng);
    Point c = nonnull_point_on_line(N, rng);
    if (a == b || c == b) continue;
    Line Ad = join(a, dual(M));
    Line Cd = join(c, dual(N));
    if (is_null(Ad) || is_null(Cd) || Ad == Cd) continue;
    Point d = meet(Ad, Cd);
    if (is_null(d) || d == a || d == b || d == c) continue;
    if (is_null(join(a, c)) || is_null(join(b, d))) continue;
    return {a, b, c, d};
  }
  exhausted("a Lambert quadrilateral");
}

std::pair<std::array<Point, 7>, std::array<Fq, 6>> septagon_conic(const FieldCtx& ctx, Rng& rng) {
  for (int attempt = 0; attempt < kMaxRejects; ++attempt) {
    std::array<std::array<Fq, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = rng.scalar(ctx);
    std::array<std::array<Fq, 3>, 3> adj;
    adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj[0][1] = -(m[0][1] * m[2][2] - m[0][2] * m[2][1]);
    adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj[1][0] = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj[1][2] = -(m[0][0] * m[1][2] - m[0][2] * m[1][0]);
    adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj[2][1] = -(m[0][0] * m[2][1] - m[0][1] * m[2][0]);
    adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Fq det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
    if (det.is_zero()) continue;
    std::vector<Point> nulls = distinct_nulls(ctx, rng, 7);
    std::array<Point, 7> pts = {nulls[0], nulls[1], nulls[2], nulls[3],
                                nulls[4], nulls[5], nulls[6]};
    bool bad = false;
    for (int i = 0; i < 7; ++i) {
      const Point& n = nulls[static_cast<std::size_t>(i)];
      Fq x = m[0][0] * n.x() + m[0][1] * n.y() + m[0][2] * n.z();
      Fq y = m[1][0] * n.x() + m[1][1] * n.y() + m[1][2] * n.z();
      Fq z = m[2][0] * n.x() + m[2][1] * n.y() + m[2][2] * n.z();
      if (x.is_zero() && y.is_zero() && z.is_zero()) {
        bad = true;
        break;
      }
      pts[static_cast<std::size_t>(i)] = Point(x, y, z);
    }
    if (bad) continue;
    // The image conic pulls the null form back through the inverse map.
    auto S = [&adj](int j, int k) {
      return adj[0][j] * adj[0][k] + adj[1][j] * adj[1][k] - adj[2][j] * adj[2][k];
    };
    std::array<Fq, 6> conic = {S(0, 0),          S(1, 1),          S(2, 2),
                               S(0, 1) + S(0, 1), S(0, 2) + S(0, 2), S(1, 2) + S(1, 2)};
    bool on = true;
    for (const Point& p : pts)
      if (!conic_eval(conic, p).is_zero()) {
        on = false;
        break;
      }
    if (!on) continue;
    return {pts, conic};
  }
  exhausted("a septagon on a conic");
}

}  // namespace gen

}  // namespace uhg
