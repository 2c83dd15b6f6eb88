#include "ireach/planar_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ireach/errors.hpp"

namespace ireach {

namespace {

using Point = Vec<double>;

constexpr int kArcPolylineSegments = 512;

double sup_dist(const Point & p, const Point & q)
{
  return (p - q).cwiseAbs().maxCoeff();
}

// min over s in [0,1] of |p - (a + s(b - a))|_inf. The objective is convex and piecewise
// linear in s, so its minimum sits at 0, 1, or a kink.
double point_segment(const Point & p, const Point & a, const Point & b)
{
  Point u = a - p;
  Point d = b - a;
  std::vector<double> cand{0.0, 1.0};
  const Eigen::Index n = p.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i) != 0.0) cand.push_back(-u(i) / d(i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (d(i) - d(j) != 0.0) cand.push_back(-(u(i) - u(j)) / (d(i) - d(j)));
      if (d(i) + d(j) != 0.0) cand.push_back(-(u(i) + u(j)) / (d(i) + d(j)));
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (double s : cand) {
    if (!(s >= 0.0 && s <= 1.0)) continue;
    best = std::min(best, (u + s * d).cwiseAbs().maxCoeff());
  }
  return best;
}

bool inside_convex(const Point & p, const std::vector<Point> & poly)
{
  const std::size_t k = poly.size();
  double scale = 0.0;
  for (const auto & v : poly) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  double tol = 1e-12 * (1.0 + scale) * (1.0 + scale);
  for (std::size_t i = 0; i < k; ++i) {
    const Point & a = poly[i];
    const Point & b = poly[(i + 1) % k];
    double cross = (b(0) - a(0)) * (p(1) - a(1)) - (b(1) - a(1)) * (p(0) - a(0));
    if (cross < -tol) return false;
  }
  return true;
}

std::vector<Point> arc_polyline(const Arc<double> & arc, int segments)
{
  std::vector<Point> out;
  double lo = static_cast<double>(arc.param_lo);
  double hi = static_cast<double>(arc.param_hi);
  for (int k = 0; k <= segments; ++k) out.push_back(arc.at(lo + (hi - lo) * k / segments));
  return out;
}

void sample_segment(const Point & a, const Point & b, int density, std::vector<Point> & out)
{
  double len = sup_dist(a, b);
  int pieces = std::max(1, static_cast<int>(std::ceil(len * density)));
  for (int k = 0; k <= pieces; ++k) out.push_back(a + (b - a) * (static_cast<double>(k) / pieces));
}

std::vector<Point> samples(const PlanarSet<double> & s, int density)
{
  std::vector<Point> out = s.points;
  for (const auto & [a, b] : s.segments) sample_segment(a, b, density, out);
  for (const auto & arc : s.arcs) {
    auto line = arc_polyline(arc, kArcPolylineSegments);
    for (std::size_t k = 0; k + 1 < line.size(); ++k) sample_segment(line[k], line[k + 1], density, out);
  }
  for (const auto & poly : s.polygons) {
    for (std::size_t k = 0; k < poly.size(); ++k) sample_segment(poly[k], poly[(k + 1) % poly.size()], density, out);
  }
  return out;
}

struct Target
{
  std::vector<Point> points;
  std::vector<std::pair<Point, Point>> segments;
  std::vector<std::vector<Point>> polygons;
};

Target as_target(const PlanarSet<double> & s)
{
  Target t{s.points, s.segments, s.polygons};
  for (const auto & arc : s.arcs) {
    auto line = arc_polyline(arc, kArcPolylineSegments);
    for (std::size_t k = 0; k + 1 < line.size(); ++k) t.segments.emplace_back(line[k], line[k + 1]);
  }
  return t;
}

double distance_to(const Point & p, const Target & t)
{
  double best = std::numeric_limits<double>::infinity();
  for (const auto & q : t.points) best = std::min(best, sup_dist(p, q));
  for (const auto & [a, b] : t.segments) best = std::min(best, point_segment(p, a, b));
  for (const auto & poly : t.polygons) {
    if (inside_convex(p, poly)) return 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) best = std::min(best, point_segment(p, poly[k], poly[(k + 1) % poly.size()]));
  }
  return best;
}

}  // namespace

std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> pts, double rel_tol)
{
  if (pts.empty()) return pts;
  double scale = 0.0;
  for (const auto & p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  double tol = rel_tol * (1.0 + scale);
  std::sort(pts.begin(), pts.end(), [](const auto & a, const auto & b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  std::vector<Eigen::Vector2d> uniq;
  for (const auto & p : pts) {
    bool dup = std::any_of(uniq.begin(), uniq.end(), [&](const auto & q) { return (p - q).cwiseAbs().maxCoeff() <= tol; });
    if (!dup) uniq.push_back(p);
  }
  if (uniq.size() <= 2) return uniq;
  auto cross = [](const Eigen::Vector2d & o, const Eigen::Vector2d & a, const Eigen::Vector2d & b) {
    return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
  };
  // Turns with |cross| below tol * |edge| count as collinear.
  auto left_turn = [&](const Eigen::Vector2d & o, const Eigen::Vector2d & a, const Eigen::Vector2d & b) {
    double len = (b - o).norm();
    return cross(o, a, b) > tol * std::max(len, tol);
  };
  std::vector<Eigen::Vector2d> hull(2 * uniq.size());
  std::size_t k = 0;
  for (const auto & p : uniq) {
    while (k >= 2 && !left_turn(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !left_turn(hull[k - 2], hull[k - 1], uniq[i])) --k;
    hull[k++] = uniq[i];
  }
  hull.resize(k - 1);
  return hull;
}

double directed_hausdorff(const PlanarSet<double> & a, const PlanarSet<double> & b, int sample_density)
{
  if (a.empty() || b.empty()) {
    throw DomainError("Hausdorff distance involving an empty set is undefined");
  }
  if (sample_density < 1) {
    throw DomainError("sample density must be positive");
  }
  Target target = as_target(b);
  double worst = 0.0;
  for (const auto & p : samples(a, sample_density)) worst = std::max(worst, distance_to(p, target));
  return worst;
}

double hausdorff_distance(const PlanarSet<double> & a, const PlanarSet<double> & b, int sample_density)
{
  return std::max(directed_hausdorff(a, b, sample_density), directed_hausdorff(b, a, sample_density));
}

double diameter(const PlanarSet<double> & a)
{
  std::vector<Point> pts = a.points;
  for (const auto & [p, q] : a.segments) {
    pts.push_back(p);
    pts.push_back(q);
  }
  for (const auto & arc : a.arcs) {
    auto line = arc_polyline(arc, 64);
    pts.insert(pts.end(), line.begin(), line.end());
  }
  for (const auto & poly : a.polygons) pts.insert(pts.end(), poly.begin(), poly.end());
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, sup_dist(pts[i], pts[j]));
  }
  return best;
}

}  // namespace ireach
