#include "ireach/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ireach/errors.hpp"

namespace ireach {

namespace {

std::string num(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

struct Frame
{
  double xmin, xmax, ymin, ymax;
  double width, height;

  double sx(double x) const { return (x - xmin) / (xmax - xmin) * width; }
  double sy(double y) const { return height - (y - ymin) / (ymax - ymin) * height; }
};

std::vector<Eigen::Vector2d> arc_points(const Arc<double> & arc, int samples)
{
  std::vector<Eigen::Vector2d> out;
  double lo = static_cast<double>(arc.param_lo);
  double hi = static_cast<double>(arc.param_hi);
  for (int k = 0; k <= samples; ++k) {
    Vec<double> p = arc.at(lo + (hi - lo) * k / samples);
    out.emplace_back(p(0), p.size() > 1 ? p(1) : 0.0);
  }
  return out;
}

Eigen::Vector2d planar(const Vec<double> & p)
{
  return {p(0), p.size() > 1 ? p(1) : 0.0};
}

}  // namespace

std::string render_svg(const PlanarSet<double> & set, const SvgStyle & style)
{
  std::vector<Eigen::Vector2d> all;
  for (const auto & p : set.points) all.push_back(planar(p));
  for (const auto & [a, b] : set.segments) {
    all.push_back(planar(a));
    all.push_back(planar(b));
  }
  for (const auto & arc : set.arcs) {
    auto pts = arc_points(arc, style.arc_samples);
    all.insert(all.end(), pts.begin(), pts.end());
  }
  for (const auto & poly : set.polygons) {
    for (const auto & p : poly) all.push_back(planar(p));
  }

  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  if (!all.empty()) {
    xmin = ymin = std::numeric_limits<double>::infinity();
    xmax = ymax = -std::numeric_limits<double>::infinity();
    for (const auto & p : all) {
      xmin = std::min(xmin, p(0));
      xmax = std::max(xmax, p(0));
      ymin = std::min(ymin, p(1));
      ymax = std::max(ymax, p(1));
    }
  }
  // degenerate extents get a unit window around the data
  if (xmax - xmin < 1e-12) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  double mx = 0.05 * (xmax - xmin);
  double my = 0.05 * (ymax - ymin);
  Frame f{xmin - mx, xmax + mx, ymin - my, ymax + my, static_cast<double>(style.width),
          static_cast<double>(style.height)};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
     << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
  if (!style.title.empty()) os << "  <title>" << style.title << "</title>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
     << "\" fill=\"white\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  os << "  <g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
  if (f.ymin <= 0 && 0 <= f.ymax) {
    os << "    <line x1=\"0\" y1=\"" << num(f.sy(0)) << "\" x2=\"" << style.width << "\" y2=\"" << num(f.sy(0))
       << "\"/>\n";
  }
  if (f.xmin <= 0 && 0 <= f.xmax) {
    os << "    <line x1=\"" << num(f.sx(0)) << "\" y1=\"0\" x2=\"" << num(f.sx(0)) << "\" y2=\"" << style.height
       << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <g id=\"bounds\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444444\">\n";
  os << "    <text x=\"4\" y=\"" << style.height - 4 << "\">x: [" << num(xmin) << ", " << num(xmax) << "]  y: ["
     << num(ymin) << ", " << num(ymax) << "]</text>\n";
  os << "  </g>\n";

  auto polyline = [&](const std::vector<Eigen::Vector2d> & pts) {
    os << "  <polyline fill=\"none\" stroke=\"" << style.stroke << "\" stroke-width=\"" << num(style.stroke_width)
       << "\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k) os << ' ';
      os << num(f.sx(pts[k](0))) << ',' << num(f.sy(pts[k](1)));
    }
    os << "\"/>\n";
  };
  for (const auto & poly : set.polygons) {
    os << "  <path fill=\"" << style.fill << "\" stroke=\"" << style.stroke << "\" stroke-width=\""
       << num(style.stroke_width) << "\" d=\"";
    for (std::size_t k = 0; k < poly.size(); ++k) {
      auto p = planar(poly[k]);
      os << (k ? " L " : "M ") << num(f.sx(p(0))) << ' ' << num(f.sy(p(1)));
    }
    os << " Z\"/>\n";
  }
  for (const auto & [a, b] : set.segments) polyline({planar(a), planar(b)});
  for (const auto & arc : set.arcs) polyline(arc_points(arc, style.arc_samples));
  for (const auto & p : set.points) {
    auto q = planar(p);
    os << "  <circle cx=\"" << num(f.sx(q(0))) << "\" cy=\"" << num(f.sy(q(1))) << "\" r=\""
       << num(style.point_radius) << "\" fill=\"" << style.stroke << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const PlanarSet<double> & set, const std::string & path, const SvgStyle & style)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write SVG to '" + path + "'");
  out << render_svg(set, style);
  if (!out) throw Error("failed writing SVG to '" + path + "'");
}

}  // namespace ireach
