#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "spheretile/errors.hpp"
#include "spheretile/sphere_geom.hpp"
#include "spheretile/tiling.hpp"

namespace spheretile {

struct RenderOptions {
  /// Edges passing within this angular distance of the projection center are
  /// rejected (or drawn as rays when split_infinite is set).
  double center_tol = 1e-6;
  bool split_infinite = false;
};

namespace detail {

inline std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

// SVG y axis points down; flip v so the figure keeps mathematical
// orientation.
inline std::pair<double, double> to_svg(const PlanePoint& p) { return {p.u, -p.v}; }

inline double min_arc_distance_to(const SpherePoint& u, const SpherePoint& v,
                                  const SpherePoint& center) {
  const Vec3 n = cross(u.vec(), v.vec());
  const double nn = n.norm();
  const double d_ends = std::min(angular_distance(u, center), angular_distance(v, center));
  if (nn < 1e-13) return d_ends;
  const Vec3 un = n / nn;
  // Closest point of the great circle to `center`, if it lies on the arc.
  Vec3 foot = center.vec() - un * un.dot(center.vec());
  if (foot.norm() < 1e-13) return d_ends;
  foot = foot.normalized();
  const double duv = angular_distance(u, v);
  const SpherePoint fp(foot);
  if (angular_distance(u, fp) <= duv && angular_distance(fp, v) <= duv)
    return std::min(d_ends, angular_distance(fp, center));
  return d_ends;
}

inline SpherePoint arc_midpoint(const SpherePoint& u, const SpherePoint& v) {
  return SpherePoint(u.vec() + v.vec());
}

}  // namespace detail

/// Renders an embedded tiling as stereographic SVG: one path per edge
/// (circular arc or segment), edge style by label (a thin solid, b thick
/// solid, c dashed), one group per face, equator at the unit circle,
/// viewBox [-2.2,-2.2,4.4,4.4].
inline std::string render_svg(const Tiling& t, const SpherePoint& pole,
                              const RenderOptions& opts = {}) {
  if (!t.has_embedding()) throw render_error("render_svg: tiling has no embedding");
  const auto edges = derive_edges(t);
  const SpherePoint center = pole.antipode();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2.2 -2.2 4.4 4.4\">\n";
  os << "  <g class=\"faces\">\n";
  for (int i = 0; i < t.tile_count(); ++i) {
    os << "    <g class=\"face\" id=\"face-" << i << "\"><title>tile " << i << "</title></g>\n";
  }
  os << "  </g>\n";
  os << "  <g class=\"edges\" fill=\"none\" stroke=\"black\">\n";

  for (size_t ei = 0; ei < edges.size(); ++ei) {
    const auto& e = edges[ei];
    const SpherePoint u(t.embedding()[e.u]);
    const SpherePoint v(t.embedding()[e.v]);

    std::string style;
    switch (e.label) {
      case EdgeLabel::A: style = "stroke-width=\"0.015\""; break;
      case EdgeLabel::B: style = "stroke-width=\"0.04\""; break;
      case EdgeLabel::C: style = "stroke-width=\"0.015\" stroke-dasharray=\"0.06,0.04\""; break;
    }

    const double dc = detail::min_arc_distance_to(u, v, center);
    if (dc < opts.center_tol) {
      if (!opts.split_infinite)
        throw render_error("render_svg: edge passes through the projection center (use split)");
      // A great circle through the center projects to a straight line, and
      // the arc's image runs through infinity: one ray per projectable
      // endpoint, outward from the origin, in a single path element.
      os << "    <path class=\"edge-" << to_string(e.label) << "\" d=\"";
      bool first = true;
      for (const SpherePoint* p : {&u, &v}) {
        if (angular_distance(*p, center) < opts.center_tol) continue;  // endpoint at infinity
        const auto [x, y] = detail::to_svg(stereo_project(*p, pole));
        const double r = std::hypot(x, y);
        const double xe = r > 1e-9 ? x * 10.0 / r : 10.0;
        const double ye = r > 1e-9 ? y * 10.0 / r : 0.0;
        os << (first ? "" : " ") << "M " << detail::fmt6(x) << " " << detail::fmt6(y) << " L "
           << detail::fmt6(xe) << " " << detail::fmt6(ye);
        first = false;
      }
      os << "\" " << style << "/>\n";
      continue;
    }

    const auto [x1, y1] = detail::to_svg(stereo_project(u, pole));
    const auto [x2, y2] = detail::to_svg(stereo_project(v, pole));
    const auto [xm, ym] = detail::to_svg(stereo_project(detail::arc_midpoint(u, v), pole));

    // Circle through the three projected points; near-collinear becomes a
    // line segment.
    const double d = 2.0 * (x1 * (ym - y2) + xm * (y2 - y1) + x2 * (y1 - ym));
    const double span = std::max({std::fabs(x1 - x2), std::fabs(y1 - y2), std::fabs(x1 - xm),
                                  std::fabs(y1 - ym)});
    os << "    <path class=\"edge-" << to_string(e.label) << "\" d=\"M " << detail::fmt6(x1)
       << " " << detail::fmt6(y1);
    if (std::fabs(d) < 1e-4 * span * span || span < 1e-12) {
      os << " L " << detail::fmt6(x2) << " " << detail::fmt6(y2);
    } else {
      const double q1 = x1 * x1 + y1 * y1, qm = xm * xm + ym * ym, q2 = x2 * x2 + y2 * y2;
      const double cx = (q1 * (ym - y2) + qm * (y2 - y1) + q2 * (y1 - ym)) / d;
      const double cy = (q1 * (x2 - xm) + qm * (x1 - x2) + q2 * (xm - x1)) / d;
      const double r = std::hypot(x1 - cx, y1 - cy);
      auto ang = [&](double x, double y) { return std::atan2(y - cy, x - cx); };
      const double a1 = ang(x1, y1), am = ang(xm, ym), a2 = ang(x2, y2);
      auto ccw_span = [](double from, double to) {
        double s = to - from;
        while (s < 0) s += 2.0 * kPi;
        while (s >= 2.0 * kPi) s -= 2.0 * kPi;
        return s;
      };
      // Sweep through the midpoint decides direction and arc size.
      const bool mid_on_ccw = ccw_span(a1, am) <= ccw_span(a1, a2);
      const double arc = mid_on_ccw ? ccw_span(a1, a2) : 2.0 * kPi - ccw_span(a1, a2);
      const int large_arc = arc > kPi ? 1 : 0;
      const int sweep = mid_on_ccw ? 1 : 0;  // svg sweep=1 is clockwise in math coords (y down)
      os << " A " << detail::fmt6(r) << " " << detail::fmt6(r) << " 0 " << large_arc << " "
         << sweep << " " << detail::fmt6(x2) << " " << detail::fmt6(y2);
    }
    os << "\" " << style << "/>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace spheretile
