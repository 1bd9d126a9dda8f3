#include "hypesi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypesi {

namespace {

constexpr double kWidth = 800.0;

struct Arc {
  double a = 0;
  double b = 0;
  bool vertical = false;  // then a is the foot and b unused
};

Arc to_arc(const Geodesic& g) {
  const Real tol = tolerances().fixed_point;
  if (!g.is_real(tol)) throw GeometryError("plot is planar-only");
  if (g.e1().is_infinite()) return {to_double(g.e2().value().real()), 0, true};
  if (g.e2().is_infinite()) return {to_double(g.e1().value().real()), 0, true};
  double a = to_double(g.e1().value().real());
  double b = to_double(g.e2().value().real());
  if (a > b) std::swap(a, b);
  return {a, b, false};
}

class Canvas {
 public:
  Canvas(double x0, double x1, double y1) : x0_(x0), y1_(y1), scale_(kWidth / (x1 - x0)) {}

  double width() const { return kWidth; }
  double height() const { return y1_ * scale_; }
  double x(double v) const { return (v - x0_) * scale_; }
  double y(double v) const { return (y1_ - v) * scale_; }
  double len(double v) const { return v * scale_; }

 private:
  double x0_;
  double y1_;
  double scale_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void arc_path(std::ostream& os, const Canvas& c, const Arc& g) {
  if (g.vertical) {
    os << "M " << fmt(c.x(g.a)) << ' ' << fmt(c.y(0)) << " L " << fmt(c.x(g.a)) << " 0";
    return;
  }
  const double r = c.len((g.b - g.a) / 2);
  os << "M " << fmt(c.x(g.a)) << ' ' << fmt(c.y(0)) << " A " << fmt(r) << ' ' << fmt(r)
     << " 0 0 1 " << fmt(c.x(g.b)) << ' ' << fmt(c.y(0));
}

// Path along g from p to q, both on g.
void arc_segment(std::ostream& os, const Canvas& c, const Arc& g, const PlanePoint& q,
                 const PlanePoint& p) {
  const double px = to_double(p.z.real()), qx = to_double(q.z.real());
  if (g.vertical) {
    os << " L " << fmt(c.x(qx)) << ' ' << fmt(c.y(to_double(q.z.imag())));
    return;
  }
  const double r = c.len((g.b - g.a) / 2);
  os << " A " << fmt(r) << ' ' << fmt(r) << " 0 0 " << (qx > px ? 1 : 0) << ' ' << fmt(c.x(qx))
     << ' ' << fmt(c.y(to_double(q.z.imag())));
}

}  // namespace

Scene esi_scene(const GroupFrame& frame, const EsiSet& set) {
  Scene s;
  s.axes.push_back(set.axis);
  for (std::size_t i = 0; i + 1 < set.records.size(); ++i) {
    const EsiRecord& r = set.records[i];
    s.lines.push_back(r.line);
    (r.right_angle ? s.crosses : s.dots).push_back(r.point);
  }
  s.hexagon = frame.hexagon;
  return s;
}

std::string render_svg(const Scene& scene) {
  std::vector<Arc> axes, lines, sides;
  for (const Geodesic& g : scene.axes) axes.push_back(to_arc(g));
  for (const Geodesic& g : scene.lines) lines.push_back(to_arc(g));
  std::vector<PlanePoint> corners;
  if (scene.hexagon) {
    for (std::size_t i = 0; i < 6; ++i) {
      sides.push_back(to_arc((*scene.hexagon)[i]));
      corners.push_back(intersection_point_h2((*scene.hexagon)[i], (*scene.hexagon)[(i + 1) % 6]));
    }
  }

  double x0 = HUGE_VAL, x1 = -HUGE_VAL, y1 = 0;
  const auto grow_x = [&](double v) {
    x0 = std::min(x0, v);
    x1 = std::max(x1, v);
  };
  for (const auto* group : {&axes, &lines, &sides})
    for (const Arc& a : *group) {
      grow_x(a.a);
      if (!a.vertical) {
        grow_x(a.b);
        y1 = std::max(y1, (a.b - a.a) / 2);
      }
    }
  const std::vector<PlanePoint>& corner_points = corners;
  for (const auto* group : {&scene.dots, &scene.crosses, &corner_points})
    for (const PlanePoint& p : *group) {
      grow_x(to_double(p.z.real()));
      y1 = std::max(y1, to_double(p.z.imag()));
    }
  if (!(x1 > x0)) {
    x0 = -1;
    x1 = 1;
  }
  if (!(y1 > 0)) y1 = (x1 - x0) / 2;
  const double mx = 0.1 * (x1 - x0);
  const Canvas c(x0 - mx, x1 + mx, 1.1 * y1);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(c.width()) << "\" height=\""
     << fmt(c.height()) << "\" viewBox=\"0 0 " << fmt(c.width()) << ' ' << fmt(c.height())
     << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << fmt(c.width()) << "\" height=\"" << fmt(c.height())
     << "\" fill=\"white\"/>\n";

  if (scene.hexagon) {
    os << "<path class=\"hexagon\" fill=\"#dde8f4\" stroke=\"none\" d=\"M "
       << fmt(c.x(to_double(corners[5].z.real()))) << ' '
       << fmt(c.y(to_double(corners[5].z.imag())));
    // corners[i] joins sides i and i+1, so side i runs from corners[i-1] to corners[i].
    for (std::size_t i = 0; i < 6; ++i) arc_segment(os, c, sides[i], corners[i], corners[(i + 5) % 6]);
    os << " Z\"/>\n";
  }
  os << "<line class=\"boundary\" x1=\"0\" y1=\"" << fmt(c.y(0)) << "\" x2=\"" << fmt(c.width())
     << "\" y2=\"" << fmt(c.y(0)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const Arc& a : lines) {
    os << "<path class=\"line\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" d=\"";
    arc_path(os, c, a);
    os << "\"/>\n";
  }
  for (const Arc& a : axes) {
    os << "<path class=\"axis\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" d=\"";
    arc_path(os, c, a);
    os << "\"/>\n";
  }
  for (const PlanePoint& p : scene.dots)
    os << "<circle class=\"kept\" cx=\"" << fmt(c.x(to_double(p.z.real()))) << "\" cy=\""
       << fmt(c.y(to_double(p.z.imag()))) << "\" r=\"3\" fill=\"black\"/>\n";
  for (const PlanePoint& p : scene.crosses) {
    const double px = c.x(to_double(p.z.real())), py = c.y(to_double(p.z.imag()));
    os << "<path class=\"excluded\" stroke=\"black\" stroke-width=\"1.5\" d=\"M " << fmt(px - 4)
       << ' ' << fmt(py - 4) << " L " << fmt(px + 4) << ' ' << fmt(py + 4) << " M " << fmt(px - 4)
       << ' ' << fmt(py + 4) << " L " << fmt(px + 4) << ' ' << fmt(py - 4) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hypesi
