#include "byzgather/svg.hpp"

#include <cstdio>
#include <sstream>

namespace byzgather {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

// SVG's y axis points down; plots keep the usual orientation.
std::string xy(Point2 p, const char* xk = "x", const char* yk = "y") {
  return std::string(xk) + "=\"" + num(p.x) + "\" " + yk + "=\"" + num(-p.y) + "\"";
}

std::string escaped(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Instance& instance, const Schedule& schedule) {
  const Circle mec = min_enclosing_circle(instance.robots());
  const double scale = mec.radius > kEpsGeo ? mec.radius : 1.0;
  const double half = 1.2 * scale;
  const double stroke = scale / 150.0;
  const double dot_r = scale / 40.0;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(mec.center.x - half) << ' '
    << num(-mec.center.y - half) << ' ' << num(2 * half) << ' ' << num(2 * half) << "\">\n"
    << "<title>" << escaped(schedule.algorithm) << "</title>\n"
    << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
       "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#444\"/></marker></defs>\n";

  o << "<circle class=\"mec\" " << xy(mec.center, "cx", "cy") << " r=\"" << num(mec.radius)
    << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\""
    << num(4 * stroke) << ' ' << num(3 * stroke) << "\"/>\n";

  for (const Trajectory& tr : schedule.trajectories) {
    o << "<polyline class=\"trajectory\" points=\"";
    for (std::size_t k = 0; k < tr.waypoints.size(); ++k) {
      if (k) o << ' ';
      o << num(tr.waypoints[k].p.x) << ',' << num(-tr.waypoints[k].p.y);
    }
    o << "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"" << num(stroke) << "\" marker-end=\"url(#arrow)\"/>\n";
  }

  const double arm = 2.0 * dot_r;
  for (std::size_t k = 0; k < schedule.meta.meeting_points.size(); ++k) {
    const Point2 p = schedule.meta.meeting_points[k];
    o << "<g class=\"cross\" stroke=\"#c0392b\" stroke-width=\"" << num(stroke) << "\">"
      << "<line " << xy(p + Point2{-arm, -arm}, "x1", "y1") << ' ' << xy(p + Point2{arm, arm}, "x2", "y2") << "/>"
      << "<line " << xy(p + Point2{-arm, arm}, "x1", "y1") << ' ' << xy(p + Point2{arm, -arm}, "x2", "y2") << "/>"
      << "</g>\n";
  }

  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Point2 p = instance.robots()[i];
    o << "<circle class=\"robot\" " << xy(p, "cx", "cy") << " r=\"" << num(dot_r)
      << "\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"" << num(stroke) << "\"/>\n"
      << "<text " << xy(p + Point2{1.5 * dot_r, 1.5 * dot_r}) << " font-size=\"" << num(4 * dot_r) << "\">" << i
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace byzgather
