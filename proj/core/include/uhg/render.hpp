#ifndef UHG_RENDER_HPP
#define UHG_RENDER_HPP

#include <string>
#include <vector>

#include "uhg/projective.hpp"
#include "uhg/script.hpp"

namespace uhg::render {

// Viewport in null-circle radii, centered on affine coordinates.
struct Viewport {
  double cx = 0.0;
  double cy = 0.0;
  double hw = 2.5;
};

// The only place exact coordinates become floating point.
struct Projected {
  bool infinite = false;
  double x = 0.0;  // affine position, or direction components when infinite
  double y = 0.0;
};

Projected project(const Point& p);

struct ScenePoint {
  std::string label;
  Projected at;
};

// Affine line a*x + b*y = c.
struct SceneLine {
  std::string label;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct SceneSegment {
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;
};

// A right-angle corner (two directions) or a parallel tick (first direction).
struct SceneMarker {
  bool parallel = false;
  double x = 0.0, y = 0.0;
  double d1x = 0.0, d1y = 0.0;
  double d2x = 0.0, d2y = 0.0;
};

struct Scene {
  Viewport viewport;
  std::vector<ScenePoint> points;
  std::vector<SceneLine> lines;
  std::vector<SceneSegment> segments;
  std::vector<SceneMarker> markers;
};

// Collects every bound object of the evaluation, in program order, plus
// right-angle corners for altitude constructions and perpendicular line
// assertions, and parallel ticks for parallel constructions.
Scene build_scene(const script::Program& prog, const script::Evaluation& ev, const Viewport& vp);

// Deterministic SVG 1.1 with fixed 9-digit decimal formatting.
std::string to_svg(const Scene& scene);

std::string render_svg(const script::Program& prog, const script::Evaluation& ev,
                       const Viewport& vp);

}  // namespace uhg::render

#endif
