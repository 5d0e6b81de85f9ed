#include "uhg/projective.hpp"

#include <vector>

namespace uhg {

namespace detail {

HomTriple::HomTriple(const Fq& a, const Fq& b, const Fq& c) : c_{a, b, c} {
  common_ctx(c_[0], c_[1]);
  const FieldCtx& ctx = common_ctx(c_[0], c_[2]);
  if (c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero())
    fail(Err::ZeroTriple, "zero coordinate triple");
  if (ctx.is_rational()) {
    mpz_class l = lcm(lcm(c_[0].rep().get_den(), c_[1].rep().get_den()), c_[2].rep().get_den());
    std::array<mpz_class, 3> n;
    for (int i = 0; i < 3; ++i) {
      mpq_class scaled = c_[i].rep() * mpq_class(l);
      scaled.canonicalize();
      n[static_cast<std::size_t>(i)] = scaled.get_num();
    }
    mpz_class g = gcd(gcd(n[0], n[1]), n[2]);
    for (auto& e : n) e /= g;
    for (auto& e : n) {
      if (sgn(e) == 0) continue;
      if (sgn(e) < 0)
        for (auto& f : n) f = -f;
      break;
    }
    for (int i = 0; i < 3; ++i) c_[static_cast<std::size_t>(i)] = Fq(ctx, n[static_cast<std::size_t>(i)]);
  } else {
    for (auto& e : c_) {
      if (e.is_zero()) continue;
      Fq inv = e.inverse();
      for (auto& f : c_) f = f * inv;
      break;
    }
  }
}

bool HomTriple::operator==(const HomTriple& o) const {
  return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

int HomTriple::cmp(const HomTriple& a, const HomTriple& b) {
  for (int i = 0; i < 3; ++i) {
    int c = Fq::cmp(a.at(i), b.at(i));
    if (c != 0) return c;
  }
  return 0;
}

std::string HomTriple::str(char open, char close) const {
  std::string s;
  s += open;
  s += c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str();
  s += close;
  return s;
}

}  // namespace detail

using detail::HomTriple;

namespace {

using Arr = std::array<Fq, 3>;

Arr coords(const Point& p) { return {p.x(), p.y(), p.z()}; }
Arr coords(const Line& l) { return {l.a(), l.b(), l.c()}; }

Arr cross(const Arr& u, const Arr& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool all_zero(const Arr& u) { return u[0].is_zero() && u[1].is_zero() && u[2].is_zero(); }

Fq det3(const Arr& u, const Arr& v, const Arr& w) {
  Arr n = cross(u, v);
  return n[0] * w[0] + n[1] * w[1] + n[2] * w[2];
}

}  // namespace

Fq form(const Point& u, const Point& v) {
  return u.x() * v.x() + u.y() * v.y() - u.z() * v.z();
}

Fq form(const Line& u, const Line& v) {
  return u.a() * v.a() + u.b() * v.b() - u.c() * v.c();
}

Fq incidence_form(const Point& p, const Line& l) {
  return l.a() * p.x() + l.b() * p.y() - l.c() * p.z();
}

bool incident(const Point& p, const Line& l) { return incidence_form(p, l).is_zero(); }
bool incident(const Line& l, const Point& p) { return incident(p, l); }

Line join(const Point& p, const Point& q) {
  Arr n = cross(coords(p), coords(q));
  if (all_zero(n)) fail(Err::IdenticalArguments, "join of coincident points " + p.str());
  return Line(n[0], n[1], -n[2]);
}

Point meet(const Line& l, const Line& m) {
  Arr lt = {l.a(), l.b(), -l.c()};
  Arr mt = {m.a(), m.b(), -m.c()};
  Arr n = cross(lt, mt);
  if (all_zero(n)) fail(Err::IdenticalArguments, "meet of coincident lines " + l.str());
  return Point(n[0], n[1], n[2]);
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return det3(coords(a), coords(b), coords(c)).is_zero();
}

bool concurrent(const Line& a, const Line& b, const Line& c) {
  return det3(coords(a), coords(b), coords(c)).is_zero();
}

const Fq& ExtValue::value() const {
  if (infinite_) fail(Err::Inconsistent, "finite value requested from inf");
  return v_;
}

bool ExtValue::operator==(const ExtValue& o) const {
  common_ctx(v_, o.v_);
  if (infinite_ != o.infinite_) return false;
  return infinite_ || v_ == o.v_;
}

ExtValue cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
  Arr n = cross(coords(a), coords(b));
  if (all_zero(n)) fail(Err::IdenticalArguments, "cross-ratio needs distinct base points");
  if (!collinear(a, b, c)) fail(Err::NotCollinear, "cross-ratio argument " + c.str() + " off the base line");
  if (!collinear(a, b, d)) fail(Err::NotCollinear, "cross-ratio argument " + d.str() + " off the base line");
  std::size_t i = 0;
  while (n[i].is_zero()) ++i;
  // c = lc*a + mc*b and d = ld*a + md*b up to one common scale per point.
  Fq lc = cross(coords(c), coords(b))[i];
  Fq mc = cross(coords(a), coords(c))[i];
  Fq ld = cross(coords(d), coords(b))[i];
  Fq md = cross(coords(a), coords(d))[i];
  Fq num = mc * ld;
  Fq den = lc * md;
  if (num.is_zero() && den.is_zero())
    fail(Err::DegenerateQuadruple, "cross-ratio of a degenerate quadruple");
  if (den.is_zero()) return ExtValue::infinity(a.ctx());
  return ExtValue::finite(num / den);
}

std::pair<Point, Point> span_points(const Line& l) {
  const Fq& a = l.a();
  const Fq& b = l.b();
  const Fq& c = l.c();
  Fq zero = Fq::zero(l.ctx());
  std::array<Arr, 3> cand = {Arr{b, -a, zero}, Arr{c, zero, a}, Arr{zero, c, b}};
  std::vector<Point> out;
  for (const auto& t : cand) {
    if (all_zero(t)) continue;
    Point p(t[0], t[1], t[2]);
    if (!out.empty() && p == out[0]) continue;
    out.push_back(p);
    if (out.size() == 2) return {out[0], out[1]};
  }
  fail(Err::Inconsistent, "line " + l.str() + " has no spanning pair");
}

Point point_on(const Line& l, const ExtValue& t) {
  auto [p, q] = span_points(l);
  if (t.is_infinite()) return q;
  const Fq& s = t.value();
  return Point(p.x() + s * q.x(), p.y() + s * q.y(), p.z() + s * q.z());
}

bool pappus_collinear(const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
  Point c1 = meet(join(a[1], b[2]), join(a[2], b[1]));
  Point c2 = meet(join(a[2], b[0]), join(a[0], b[2]));
  Point c3 = meet(join(a[0], b[1]), join(a[1], b[0]));
  return collinear(c1, c2, c3);
}

bool desargues_collinear(const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
  Point m1 = meet(join(a[0], a[1]), join(b[0], b[1]));
  Point m2 = meet(join(a[1], a[2]), join(b[1], b[2]));
  Point m3 = meet(join(a[2], a[0]), join(b[2], b[0]));
  return collinear(m1, m2, m3);
}

}  // namespace uhg
