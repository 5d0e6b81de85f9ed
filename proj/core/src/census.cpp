#include "uhg/census.hpp"

#include <optional>
#include <sstream>

#include "uhg/duality.hpp"
#include "uhg/metric.hpp"
#include "uhg/projective.hpp"

namespace uhg {

namespace {

template <typename F>
void each_triple(const FieldCtx& ctx, long p, F f) {
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) f(Fq(ctx, x), Fq(ctx, y), Fq::one(ctx));
  for (long x = 0; x < p; ++x) f(Fq(ctx, x), Fq::one(ctx), Fq::zero(ctx));
  f(Fq::one(ctx), Fq::zero(ctx), Fq::zero(ctx));
}

long residue(const Fq& v) { return v.rep().get_num().get_si(); }

}  // namespace

CensusReport census(long p, bool with_circles) {
  FieldCtx ctx = FieldCtx::prime(static_cast<unsigned long>(p));
  CensusReport rep;
  rep.p = p;
  std::optional<Point> square_center, nonsquare_center;
  std::vector<Point> points;
  each_triple(ctx, p, [&](const Fq& x, const Fq& y, const Fq& z) {
    Point pt(x, y, z);
    points.push_back(pt);
    ++rep.total_points;
    Fq f = form(pt, pt);
    if (f.is_zero()) {
      ++rep.null_points;
    } else if (is_square(f)) {
      ++rep.form_square;
      if (!square_center) square_center = pt;
    } else {
      ++rep.form_nonsquare;
      if (!nonsquare_center) nonsquare_center = pt;
    }
  });
  each_triple(ctx, p, [&](const Fq& a, const Fq& b, const Fq& c) {
    Line l(a, b, c);
    if (form(l, l).is_zero()) ++rep.null_lines;
  });
  if (with_circles) {
    for (const auto& center : {square_center, nonsquare_center}) {
      if (!center) continue;
      std::vector<long> tally(static_cast<std::size_t>(p), 0);
      for (const Point& x : points) {
        if (is_null(x)) continue;
        ++tally[static_cast<std::size_t>(residue(quadrance(x, *center)))];
      }
      for (long k = 0; k < p; ++k)
        rep.circles.push_back({center->str(), k, tally[static_cast<std::size_t>(k)]});
    }
  }
  return rep;
}

std::string CensusReport::str() const {
  std::ostringstream os;
  os << "field fp:" << p << '\n';
  os << "projective_points " << total_points << '\n';
  os << "null_points " << null_points << '\n';
  os << "null_lines " << null_lines << '\n';
  os << "form_square " << form_square << '\n';
  os << "form_nonsquare " << form_nonsquare << '\n';
  for (const CircleCount& c : circles)
    os << "circle center=" << c.center << " k=" << c.k << " points=" << c.points << '\n';
  return os.str();
}

}  // namespace uhg
