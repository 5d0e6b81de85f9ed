#include "doctest.h"

#include <uhg/duality.hpp>
#include <uhg/render.hpp>
#include <uhg/script.hpp>

#include <cmath>
#include <string>

using namespace uhg;
using namespace uhg::render;

namespace {

script::Evaluation eval_src(const std::string& src, script::Program& prog_out) {
  script::ParseResult pr = script::parse(src);
  REQUIRE(pr.ok());
  prog_out = *pr.program;
  return script::evaluate(prog_out);
}

}  // namespace

TEST_CASE("projection is the only floating boundary") {
  FieldCtx q = FieldCtx::rationals();

  Projected p = project(Point(q, 1, 0, 2));
  CHECK_FALSE(p.infinite);
  CHECK(p.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.y == doctest::Approx(0.0).epsilon(1e-12));

  Projected d = project(Point(q, 1, 2, 0));
  CHECK(d.infinite);
  CHECK(d.y / d.x == doctest::Approx(2.0).epsilon(1e-12));

  Point on_circle = null_point(ExtValue::finite(Fq(q, 1)));
  CHECK(on_circle == Point(q, 0, 1, 1));
  Projected c = project(on_circle);
  CHECK(c.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.y == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("svg output is byte deterministic") {
  script::Program prog;
  script::Evaluation ev = eval_src(
      "a = [0:0:1];\n"
      "b = [3/5:0:1];\n"
      "L = join(a, b);\n"
      "A = altitude_line(a, L);\n"
      "m = midpoints(a, b);\n"
      "inf = [1:2:0];\n"
      "assert perp(A, L);\n",
      prog);

  std::string one = render_svg(prog, ev, Viewport{});
  std::string two = render_svg(prog, ev, Viewport{});
  CHECK(one == two);
  CHECK(one.find("<?xml version=\"1.0\"") == 0);
  CHECK(one.find("version=\"1.1\"") != std::string::npos);
  CHECK(one.find("width=\"640\" height=\"640\"") != std::string::npos);
  CHECK(one.find("#1e66c8") != std::string::npos);    // null circle
  CHECK(one.find("#b3261e") != std::string::npos);    // points
  CHECK(one.find("#2a7a2a") != std::string::npos);    // right-angle marker
  CHECK(one.find("m.1") != std::string::npos);
  CHECK(one.find("-0.") == std::string::npos);        // negative zero never printed

  std::string three = render_svg(prog, ev, Viewport{0.5, 0.0, 1.25});
  CHECK(three != one);
}

TEST_CASE("projected incidences stay inside the tolerance") {
  script::Program prog;
  script::Evaluation ev = eval_src(
      "a1 = [1:2:4];\n"
      "a2 = [3:0:5];\n"
      "a3 = [2:3:1];\n"
      "L1 = join(a2, a3);\n"
      "A1 = altitude_line(a1, L1);\n"
      "h = meet(A1, altitude_line(a2, join(a1, a3)));\n"
      "assert incident(h, altitude_line(a3, join(a1, a2)));\n",
      prog);

  Viewport vp;
  Scene scene = build_scene(prog, ev, vp);
  CHECK_FALSE(scene.points.empty());
  CHECK_FALSE(scene.lines.empty());

  // every exactly-incident (point, line) pair projects onto the drawn line
  for (const auto& sp : scene.points) {
    if (sp.at.infinite) continue;
    const script::Value& v = ev.bindings.at(sp.label);
    const Point& p = std::get<Point>(v.items[0]);
    for (const auto& sl : scene.lines) {
      const Line& l = std::get<Line>(ev.bindings.at(sl.label).items[0]);
      if (!incident(p, l)) continue;
      double num = std::abs(sl.a * sp.at.x + sl.b * sp.at.y - sl.c);
      double den = std::hypot(sl.a, sl.b);
      REQUIRE(den > 0.0);
      CHECK(num / den <= 1e-9);
    }
  }
}

TEST_CASE("infinite points are drawn as boundary arrows") {
  script::Program prog;
  script::Evaluation ev = eval_src("d = [1:2:0];\n", prog);
  std::string svg = render_svg(prog, ev, Viewport{});
  CHECK(svg.find(">d</text>") != std::string::npos);
  CHECK(svg.find("Z\" fill=\"#b3261e\"") != std::string::npos);
}
