#include "uhg/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "uhg/duality.hpp"

namespace uhg::render {

namespace {

constexpr double kSize = 640.0;

std::string num(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // normalize -0
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

struct Mapper {
  Viewport vp;

  double sx(double x) const { return (x - (vp.cx - vp.hw)) * (kSize / (2.0 * vp.hw)); }
  double sy(double y) const { return ((vp.cy + vp.hw) - y) * (kSize / (2.0 * vp.hw)); }
  double scale() const { return kSize / (2.0 * vp.hw); }
};

double to_double(const Fq& v) { return v.rep().get_d(); }

// Clips a*x + b*y = c to the viewport rectangle; false when no visible part.
bool clip_line(const SceneLine& l, const Viewport& vp, double& x1, double& y1, double& x2,
               double& y2) {
  if (std::fabs(l.a) < 1e-300 && std::fabs(l.b) < 1e-300) return false;
  const double lo_x = vp.cx - vp.hw, hi_x = vp.cx + vp.hw;
  const double lo_y = vp.cy - vp.hw, hi_y = vp.cy + vp.hw;
  const double eps = 1e-9 * vp.hw;
  double px[8], py[8];
  int n = 0;
  auto add = [&](double x, double y) {
    if (x < lo_x - eps || x > hi_x + eps || y < lo_y - eps || y > hi_y + eps) return;
    for (int i = 0; i < n; ++i)
      if (std::fabs(px[i] - x) < eps && std::fabs(py[i] - y) < eps) return;
    if (n < 8) {
      px[n] = x;
      py[n] = y;
      ++n;
    }
  };
  if (std::fabs(l.b) > 1e-300) {
    add(lo_x, (l.c - l.a * lo_x) / l.b);
    add(hi_x, (l.c - l.a * hi_x) / l.b);
  }
  if (std::fabs(l.a) > 1e-300) {
    add((l.c - l.b * lo_y) / l.a, lo_y);
    add((l.c - l.b * hi_y) / l.a, hi_y);
  }
  if (n < 2) return false;
  int bi = 0, bj = 1;
  double best = -1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = (px[i] - px[j]) * (px[i] - px[j]) + (py[i] - py[j]) * (py[i] - py[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  if (best <= 0.0) return false;
  x1 = px[bi];
  y1 = py[bi];
  x2 = px[bj];
  y2 = py[bj];
  return true;
}

// Resolves a Ref argument against the bindings; only simple references are
// used for marker placement.
const script::Single* resolve_ref(const script::Expr& e, const script::Evaluation& ev) {
  if (e.kind != script::Expr::Kind::Ref) return nullptr;
  auto it = ev.bindings.find(e.name);
  if (it == ev.bindings.end()) return nullptr;
  const auto& items = it->second.items;
  std::size_t idx = e.index > 0 ? static_cast<std::size_t>(e.index - 1) : 0;
  if (e.index == 0 && it->second.tuple) return nullptr;
  if (idx >= items.size()) return nullptr;
  return &items[idx];
}

SceneLine affine_line(const Line& l, const std::string& label) {
  SceneLine out;
  out.label = label;
  out.a = to_double(l.a());
  out.b = to_double(l.b());
  out.c = to_double(l.c());
  return out;
}

void add_value(Scene& scene, const std::string& label, const script::Single& s) {
  if (const Point* p = std::get_if<Point>(&s)) {
    scene.points.push_back({label, project(*p)});
  } else if (const Line* l = std::get_if<Line>(&s)) {
    scene.lines.push_back(affine_line(*l, label));
  }
}

bool corner_marker(const Line& l1, const Line& l2, SceneMarker& mk) {
  if (l1 == l2) return false;
  Point x = meet(l1, l2);
  Projected p = project(x);
  if (p.infinite) return false;
  mk.parallel = false;
  mk.x = p.x;
  mk.y = p.y;
  mk.d1x = to_double(l1.b());
  mk.d1y = -to_double(l1.a());
  mk.d2x = to_double(l2.b());
  mk.d2y = -to_double(l2.a());
  return true;
}

}  // namespace

Projected project(const Point& p) {
  Projected out;
  if (p.z().is_zero()) {
    out.infinite = true;
    out.x = to_double(p.x());
    out.y = to_double(p.y());
    return out;
  }
  out.x = (p.x() / p.z()).rep().get_d();
  out.y = (p.y() / p.z()).rep().get_d();
  return out;
}

Scene build_scene(const script::Program& prog, const script::Evaluation& ev, const Viewport& vp) {
  Scene scene;
  scene.viewport = vp;
  for (const script::StmtResult& r : ev.results) {
    if (r.kind != script::StmtResult::Kind::Bound) continue;
    auto it = ev.bindings.find(r.name);
    if (it == ev.bindings.end()) continue;
    const script::Value& v = it->second;
    if (!v.tuple) {
      add_value(scene, r.name, v.items[0]);
    } else {
      for (std::size_t k = 0; k < v.items.size(); ++k)
        add_value(scene, r.name + "." + std::to_string(k + 1), v.items[k]);
    }
  }
  for (const script::Stmt& s : prog.stmts) {
    if (s.kind == script::Stmt::Kind::Binding) {
      const script::Expr& e = s.args[0];
      if (e.kind != script::Expr::Kind::Call) continue;
      auto bound = ev.bindings.find(s.name);
      if (bound == ev.bindings.end() || bound->second.tuple) continue;
      const Line* made = std::get_if<Line>(&bound->second.items[0]);
      if (!made) continue;
      if (e.name == "altitude_line") {
        if (const script::Single* base = resolve_ref(e.args[1], ev))
          if (const Line* l = std::get_if<Line>(base)) {
            SceneMarker mk;
            if (corner_marker(*made, *l, mk)) scene.markers.push_back(mk);
          }
      } else if (e.name == "parallel_line") {
        SceneMarker mk;
        mk.parallel = true;
        mk.d1x = to_double(made->b());
        mk.d1y = -to_double(made->a());
        scene.markers.push_back(mk);
        SceneLine sl = affine_line(*made, "");
        double x1, y1, x2, y2;
        if (clip_line(sl, vp, x1, y1, x2, y2)) {
          scene.markers.back().x = 0.5 * (x1 + x2);
          scene.markers.back().y = 0.5 * (y1 + y2);
        }
        if (const script::Single* base = resolve_ref(e.args[1], ev))
          if (const Line* l = std::get_if<Line>(base)) {
            SceneMarker mk2;
            mk2.parallel = true;
            mk2.d1x = to_double(l->b());
            mk2.d1y = -to_double(l->a());
            SceneLine sl2 = affine_line(*l, "");
            if (clip_line(sl2, vp, x1, y1, x2, y2)) {
              mk2.x = 0.35 * x1 + 0.65 * x2;
              mk2.y = 0.35 * y1 + 0.65 * y2;
              scene.markers.push_back(mk2);
            }
          }
      }
    } else if (s.name == "perp" && s.args.size() == 2) {
      const script::Single* a = resolve_ref(s.args[0], ev);
      const script::Single* b = resolve_ref(s.args[1], ev);
      if (!a || !b) continue;
      const Line* l1 = std::get_if<Line>(a);
      const Line* l2 = std::get_if<Line>(b);
      if (!l1 || !l2) continue;
      SceneMarker mk;
      if (corner_marker(*l1, *l2, mk)) scene.markers.push_back(mk);
    }
  }
  return scene;
}

std::string to_svg(const Scene& scene) {
  const Mapper m{scene.viewport};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
        "height=\"640\" viewBox=\"0 0 640 640\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
  // The null circle is always drawn, in blue.
  os << "<circle cx=\"" << num(m.sx(0.0)) << "\" cy=\"" << num(m.sy(0.0)) << "\" r=\""
     << num(m.scale()) << "\" fill=\"none\" stroke=\"#1e66c8\" stroke-width=\"1.5\"/>\n";
  for (const SceneLine& l : scene.lines) {
    double x1, y1, x2, y2;
    if (!clip_line(l, scene.viewport, x1, y1, x2, y2)) continue;
    os << "<line x1=\"" << num(m.sx(x1)) << "\" y1=\"" << num(m.sy(y1)) << "\" x2=\""
       << num(m.sx(x2)) << "\" y2=\"" << num(m.sy(y2))
       << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    if (!l.label.empty()) {
      double lx = 0.82 * x1 + 0.18 * x2;
      double ly = 0.82 * y1 + 0.18 * y2;
      os << "<text x=\"" << num(m.sx(lx) + 5.0) << "\" y=\"" << num(m.sy(ly) - 5.0)
         << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#444444\">" << l.label
         << "</text>\n";
    }
  }
  for (const SceneSegment& s : scene.segments) {
    os << "<line x1=\"" << num(m.sx(s.x1)) << "\" y1=\"" << num(m.sy(s.y1)) << "\" x2=\""
       << num(m.sx(s.x2)) << "\" y2=\"" << num(m.sy(s.y2))
       << "\" stroke=\"#777777\" stroke-width=\"1\"/>\n";
  }
  for (const SceneMarker& mk : scene.markers) {
    double u1 = mk.d1x, v1 = mk.d1y;
    double n1 = std::hypot(u1, v1);
    if (n1 < 1e-300) continue;
    u1 /= n1;
    v1 /= n1;
    // pixel-space directions flip y
    double pux = u1, puy = -v1;
    double px = m.sx(mk.x), py = m.sy(mk.y);
    if (!mk.parallel) {
      double u2 = mk.d2x, v2 = mk.d2y;
      double n2 = std::hypot(u2, v2);
      if (n2 < 1e-300) continue;
      u2 /= n2;
      v2 /= n2;
      double qux = u2, quy = -v2;
      const double s = 9.0;
      os << "<path d=\"M " << num(px + s * pux) << ' ' << num(py + s * puy) << " L "
         << num(px + s * (pux + qux)) << ' ' << num(py + s * (puy + quy)) << " L "
         << num(px + s * qux) << ' ' << num(py + s * quy)
         << "\" fill=\"none\" stroke=\"#2a7a2a\" stroke-width=\"1.2\"/>\n";
    } else {
      double nx = -puy, ny = pux;
      for (int k = 0; k < 2; ++k) {
        double cx = px + (4.0 * k - 2.0) * pux;
        double cy = py + (4.0 * k - 2.0) * puy;
        os << "<line x1=\"" << num(cx - 3.0 * pux - 5.0 * nx) << "\" y1=\""
           << num(cy - 3.0 * puy - 5.0 * ny) << "\" x2=\"" << num(cx + 3.0 * pux + 5.0 * nx)
           << "\" y2=\"" << num(cy + 3.0 * puy + 5.0 * ny)
           << "\" stroke=\"#2a7a2a\" stroke-width=\"1.2\"/>\n";
      }
    }
  }
  for (const ScenePoint& p : scene.points) {
    if (p.at.infinite) {
      double dx = p.at.x, dy = p.at.y;
      double n = std::hypot(dx, dy);
      if (n < 1e-300) continue;
      dx /= n;
      dy /= n;
      // boundary position along the direction from the viewport center
      double t = scene.viewport.hw / std::max(std::fabs(dx), std::fabs(dy));
      double bx = scene.viewport.cx + t * dx;
      double by = scene.viewport.cy + t * dy;
      double px = m.sx(bx), py = m.sy(by);
      double pux = dx, puy = -dy;
      double nx = -puy, ny = pux;
      os << "<path d=\"M " << num(px) << ' ' << num(py) << " L " << num(px - 12.0 * pux + 5.0 * nx)
         << ' ' << num(py - 12.0 * puy + 5.0 * ny) << " L " << num(px - 12.0 * pux - 5.0 * nx)
         << ' ' << num(py - 12.0 * puy - 5.0 * ny) << " Z\" fill=\"#b3261e\"/>\n";
      if (!p.label.empty())
        os << "<text x=\"" << num(px - 18.0 * pux + 8.0) << "\" y=\"" << num(py - 18.0 * puy - 8.0)
           << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#b3261e\">" << p.label
           << "</text>\n";
      continue;
    }
    double px = m.sx(p.at.x), py = m.sy(p.at.y);
    if (px < -20.0 || px > kSize + 20.0 || py < -20.0 || py > kSize + 20.0) continue;
    os << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py)
       << "\" r=\"3.5\" fill=\"#b3261e\"/>\n";
    if (!p.label.empty())
      os << "<text x=\"" << num(px + 6.0) << "\" y=\"" << num(py - 6.0)
         << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#b3261e\">" << p.label
         << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const script::Program& prog, const script::Evaluation& ev,
                       const Viewport& vp) {
  return to_svg(build_scene(prog, ev, vp));
}

}  // namespace uhg::render
