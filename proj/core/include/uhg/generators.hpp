#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uhg/duality.hpp"
#include "uhg/field.hpp"
#include "uhg/projective.hpp"
#include "uhg/rng.hpp"

namespace uhg {

using Binding = std::variant<Point, Line, Fq>;

// Named bindings produced by a generator, with enough provenance to replay.
struct Configuration {
  std::string generator;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, Binding>> bindings;

  void bind(const std::string& name, const Point& p) { bindings.emplace_back(name, p); }
  void bind(const std::string& name, const Line& l) { bindings.emplace_back(name, l); }
  void bind(const std::string& name, const Fq& v) { bindings.emplace_back(name, v); }
  const Point& point(const std::string& name) const;
  const Line& line(const std::string& name) const;
  const Fq& scalar(const std::string& name) const;
  std::string str() const;
};

std::vector<std::string> generator_ids();
// Deterministic in (kind, ctx, seed). Errors: UnknownGenerator, GeneratorExhausted.
Configuration generate(const std::string& kind, const FieldCtx& ctx, std::uint64_t seed);

namespace gen {

inline constexpr int kMaxRejects = 64;

[[noreturn]] void exhausted(const char* what);

Fq scalar(const FieldCtx& ctx, Rng& rng);
Point random_point(const FieldCtx& ctx, Rng& rng);  // not on the null circle
Line random_line(const FieldCtx& ctx, Rng& rng);    // not a null line
Point random_null(const FieldCtx& ctx, Rng& rng);
std::vector<Point> distinct_nulls(const FieldCtx& ctx, Rng& rng, int n);
Point point_on_line(const Line& l, Rng& rng);                // any point of l
Point nonnull_point_on_line(const Line& l, Rng& rng);        // rejects null picks

// Non-collinear, non-dual, with non-null points and non-null joins, and all
// quadrances and spreads defined.
std::array<Point, 3> triangle(const FieldCtx& ctx, Rng& rng);
// Spread 1 at a3, full metrics defined.
std::array<Point, 3> right_triangle(const FieldCtx& ctx, Rng& rng);
// q(a2,a3) = q(a1,a3) and matching spreads, by reflective symmetry.
std::array<Point, 3> isosceles_triangle(const FieldCtx& ctx, Rng& rng);
// All three quadrances equal, all three spreads equal.
std::array<Point, 3> equilateral_triangle(const FieldCtx& ctx, Rng& rng);
// Every side admits the midpoint construction.
std::array<Point, 3> midpoint_triangle(const FieldCtx& ctx, Rng& rng);

// A side with constructible midpoints plus its two null-carrying secants:
// M through b, N through c, both through the pole of join(b,c).
struct SideWithMidpoints {
  Point b, c, d, e;
  Line M, N;
};
SideWithMidpoints midpoint_side(const FieldCtx& ctx, Rng& rng);

// Quadrilateral a,b,c,d with right spreads at a, b and c.
std::array<Point, 4> lambert_quadrilateral(const FieldCtx& ctx, Rng& rng);

// Seven distinct points on a common conic (a seeded projective image of the
// null circle), plus the conic coefficients.
std::pair<std::array<Point, 7>, std::array<Fq, 6>> septagon_conic(const FieldCtx& ctx, Rng& rng);

}  // namespace gen

}  // namespace uhg
