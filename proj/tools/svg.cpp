#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace dsgtool {

using dsg::Ball;
using dsg::Coord;
using dsg::PairClass;
using dsg::Pt2;
using dsg::Scene;

namespace {

double to_double(const dsg::Rat& r) { return r.get_d(); }

double coord_value(const Coord& c) {
  if (c.rational) return to_double(c.r);
  return to_double(c.c) * std::sqrt(to_double(c.q));
}

struct Circle {
  double x, y, r;
  std::string label;
};

struct Canvas {
  std::ostringstream body;
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  bool any = false;

  void grow(double x, double y, double r) {
    if (!any) {
      minx = x - r;
      maxx = x + r;
      miny = y - r;
      maxy = y + r;
      any = true;
    } else {
      minx = std::min(minx, x - r);
      maxx = std::max(maxx, x + r);
      miny = std::min(miny, y - r);
      maxy = std::max(maxy, y + r);
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void emit_circle(Canvas& cv, const Circle& c, const char* stroke,
                 const char* fill, double stroke_width) {
  cv.grow(c.x, c.y, c.r);
  cv.body << "  <circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(-c.y)
          << "\" r=\"" << fmt(c.r) << "\" stroke=\"" << stroke << "\" fill=\""
          << fill << "\" stroke-width=\"" << fmt(stroke_width) << "\"/>\n";
}

void emit_label(Canvas& cv, double x, double y, double size,
                const std::string& text) {
  cv.body << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(-y)
          << "\" font-size=\"" << fmt(size)
          << "\" font-family=\"monospace\" fill=\"#333\">" << text
          << "</text>\n";
}

void emit_marker(Canvas& cv, double x, double y, double size) {
  cv.body << "  <rect x=\"" << fmt(x - size / 2) << "\" y=\""
          << fmt(-y - size / 2) << "\" width=\"" << fmt(size)
          << "\" height=\"" << fmt(size) << "\" fill=\"#c22\"/>\n";
}

std::string finish(Canvas& cv, bool timestamp_comment) {
  double pad = cv.any ? 0.05 * std::max(cv.maxx - cv.minx, cv.maxy - cv.miny)
                      : 0.5;
  if (pad <= 0) pad = 0.5;
  double w = cv.maxx - cv.minx + 2 * pad;
  double h = cv.maxy - cv.miny + 2 * pad;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (timestamp_comment) out << "<!-- generated " << __DATE__ << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\""
      << fmt(cv.minx - pad) << " " << fmt(-cv.maxy - pad) << " " << fmt(w)
      << " " << fmt(h) << "\">\n";
  out << cv.body.str();
  out << "</svg>\n";
  return out.str();
}

void render_cross_section(const Scene& s, const RenderView& view, Canvas& cv) {
  // axis index along the plane normal, and the two in-plane axes
  int normal = view.kind == RenderView::Kind::PlaneX0   ? 0
               : view.kind == RenderView::Kind::PlaneY0 ? 1
                                                        : 2;
  double plane = view.kind == RenderView::Kind::SliceZ ? view.z : 0.0;
  int ax1 = normal == 0 ? 1 : 0;
  int ax2 = normal == 2 ? 1 : 2;

  std::vector<Circle> circles;
  double min_r = 0;
  for (const auto& b : s.balls) {
    double off = coord_value(b.center[normal]) - plane;
    double rr = to_double(b.radius_sq) - off * off;
    if (rr <= 0) continue;
    Circle c;
    c.x = coord_value(b.center[ax1]);
    c.y = coord_value(b.center[ax2]);
    c.r = std::sqrt(rr);
    c.label = b.label;
    circles.push_back(c);
    min_r = min_r == 0 ? c.r : std::min(min_r, c.r);
  }
  for (const auto& c : circles)
    emit_circle(cv, c, "#246", "none", std::max(min_r * 0.04, 1e-3));
  for (const auto& c : circles)
    emit_label(cv, c.x, c.y, std::max(min_r * 0.3, 1e-2), c.label);

  // tangency markers where the touching point lies in the rendered plane
  dsg::IntersectionResult res = dsg::intersection_graph(s);
  for (const auto& [la, lb] : res.tangent_pairs) {
    const Ball* pa = nullptr;
    const Ball* pb = nullptr;
    for (const auto& b : s.balls) {
      if (b.label == la) pa = &b;
      if (b.label == lb) pb = &b;
    }
    if (!pa || !pb) continue;
    double ra = std::sqrt(to_double(pa->radius_sq));
    double rb = std::sqrt(to_double(pb->radius_sq));
    double t = ra / (ra + rb);
    double p[3];
    for (int ax = 0; ax < 3; ++ax) {
      double ca = coord_value(pa->center[ax]);
      double cb = coord_value(pb->center[ax]);
      p[ax] = ca + t * (cb - ca);
    }
    if (std::abs(p[normal] - plane) > 1e-9) continue;
    emit_marker(cv, p[ax1], p[ax2], std::max(min_r * 0.12, 1e-2));
  }
}

void render_planar(const Scene& s, Canvas& cv) {
  // context circles: the unit circle and each distinct hull inner radius
  emit_circle(cv, {0, 0, 1.0, ""}, "#bbb", "none", 0.004);
  std::vector<double> inner_seen;
  for (const auto& o : s.objects) {
    if (o.kind != dsg::PlanarObject::Kind::Hull) continue;
    double rho = to_double(o.inner_radius);
    bool dup = false;
    for (double r : inner_seen) dup |= std::abs(r - rho) < 1e-12;
    if (!dup) {
      inner_seen.push_back(rho);
      emit_circle(cv, {0, 0, rho, ""}, "#bbb", "none", 0.004);
    }
  }
  for (const auto& p : s.circle_points) {
    double x = to_double(p.x), y = to_double(p.y);
    emit_circle(cv, {x, y, 0.012, ""}, "none", "#888", 0);
  }
  for (const auto& o : s.objects) {
    if (o.kind == dsg::PlanarObject::Kind::Disk) {
      double x = to_double(o.center.x), y = to_double(o.center.y);
      double r = to_double(o.radius);
      emit_circle(cv, {x, y, r, ""}, "#246", "none", 0.006);
      emit_label(cv, x + r * 0.2, y, 0.07, o.label);
      continue;
    }
    // hull boundary: tangent segments and arcs around the inner circle,
    // straight chords where generator points are close together
    double rho = to_double(o.inner_radius);
    double alpha = std::acos(rho);
    std::vector<double> angles;
    for (int gi : o.generators) {
      const Pt2& p = s.circle_points[gi];
      angles.push_back(std::atan2(to_double(p.y), to_double(p.x)));
    }
    std::sort(angles.begin(), angles.end());
    std::ostringstream path;
    path.precision(6);
    std::size_t n = angles.size();
    auto pt = [](double r, double a) {
      return std::pair<double, double>{r * std::cos(a), r * std::sin(a)};
    };
    auto [sx, sy] = pt(1.0, angles[0]);
    path << "M " << sx << " " << -sy << " ";
    for (std::size_t i = 0; i < n; ++i) {
      double a = angles[i];
      double b = angles[(i + 1) % n] + (i + 1 == n ? 2 * M_PI : 0);
      if (n > 1 && b - a < 2 * alpha) {
        auto [ex, ey] = pt(1.0, b);
        path << "L " << ex << " " << -ey << " ";
      } else {
        auto [t1x, t1y] = pt(rho, a + alpha);
        auto [t2x, t2y] = pt(rho, b - alpha);
        path << "L " << t1x << " " << -t1y << " ";
        path << "A " << rho << " " << rho << " 0 "
             << ((b - a - 2 * alpha) > M_PI ? 1 : 0) << " 0 " << t2x << " "
             << -t2y << " ";
        auto [ex, ey] = pt(1.0, b);
        path << "L " << ex << " " << -ey << " ";
      }
    }
    path << "Z";
    cv.grow(0, 0, 1.0);
    cv.body << "  <path d=\"" << path.str()
            << "\" stroke=\"#824\" fill=\"none\" stroke-width=\"0.006\"/>\n";
    const Pt2& p0 = s.circle_points[o.generators[0]];
    emit_label(cv, to_double(p0.x) * 0.85, to_double(p0.y) * 0.85, 0.07,
               o.label);
  }
}

}  // namespace

RenderView parse_view(const std::string& spec) {
  RenderView v{RenderView::Kind::Planar, 0.0};
  if (spec == "planar") return v;
  if (spec == "x=0") {
    v.kind = RenderView::Kind::PlaneX0;
    return v;
  }
  if (spec == "y=0") {
    v.kind = RenderView::Kind::PlaneY0;
    return v;
  }
  if (spec.rfind("z=", 0) == 0) {
    v.kind = RenderView::Kind::SliceZ;
    std::string val = spec.substr(2);
    try {
      if (val.find('/') != std::string::npos)
        v.z = dsg::rat_from_string(val).get_d();
      else
        v.z = std::stod(val);
    } catch (...) {
      throw std::invalid_argument("bad z value in view spec: " + spec);
    }
    return v;
  }
  throw std::invalid_argument("unknown view spec: " + spec +
                              " (expected x=0, y=0, z=<c>, planar)");
}

std::string render_svg(const Scene& scene, const RenderView& view,
                       bool timestamp_comment) {
  Canvas cv;
  if (view.kind == RenderView::Kind::Planar) {
    if (scene.dimension != 2)
      throw std::invalid_argument("planar view needs a 2d scene");
    render_planar(scene, cv);
  } else {
    if (scene.dimension != 3)
      throw std::invalid_argument("cross-section views need a 3d scene");
    render_cross_section(scene, view, cv);
  }
  return finish(cv, timestamp_comment);
}

}  // namespace dsgtool
