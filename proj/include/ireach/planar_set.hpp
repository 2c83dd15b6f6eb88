#pragma once

#include <vector>

#include "ireach/polynomial.hpp"

namespace ireach {

/// Polynomial curve t -> (coords[0](t), ..., coords[n-1](t)) over [param_lo, param_hi].
template<typename Scalar>
struct Arc
{
  Rat param_lo;
  Rat param_hi;
  std::vector<poly::Poly<Scalar>> coords;

  Vec<Scalar> at(const Scalar & t) const
  {
    Vec<Scalar> p(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) p(static_cast<Eigen::Index>(i)) = poly::eval(coords[i], t);
    return p;
  }
};

/// Finite union of points, segments, polynomial arcs and convex polygons in R^n.
/// Polygons are two-dimensional, convex, counterclockwise.
template<typename Scalar>
struct PlanarSet
{
  using Point = Vec<Scalar>;

  int dim = 2;
  std::vector<Point> points;
  std::vector<std::pair<Point, Point>> segments;
  std::vector<Arc<Scalar>> arcs;
  std::vector<std::vector<Point>> polygons;

  bool empty() const { return points.empty() && segments.empty() && arcs.empty() && polygons.empty(); }

  void append(const PlanarSet & other)
  {
    points.insert(points.end(), other.points.begin(), other.points.end());
    segments.insert(segments.end(), other.segments.begin(), other.segments.end());
    arcs.insert(arcs.end(), other.arcs.begin(), other.arcs.end());
    polygons.insert(polygons.end(), other.polygons.begin(), other.polygons.end());
  }

  template<typename To>
  PlanarSet<To> cast() const
  {
    auto conv = [](const Point & p) {
      Vec<To> q(p.size());
      for (Eigen::Index i = 0; i < p.size(); ++i) q(i) = scalar_cast<To>(p(i));
      return q;
    };
    PlanarSet<To> out;
    out.dim = dim;
    for (const auto & p : points) out.points.push_back(conv(p));
    for (const auto & [a, b] : segments) out.segments.emplace_back(conv(a), conv(b));
    for (const auto & arc : arcs) {
      Arc<To> a{arc.param_lo, arc.param_hi, {}};
      for (const auto & c : arc.coords) a.coords.push_back(conv(c));
      out.arcs.push_back(std::move(a));
    }
    for (const auto & poly : polygons) {
      std::vector<Vec<To>> q;
      for (const auto & p : poly) q.push_back(conv(p));
      out.polygons.push_back(std::move(q));
    }
    return out;
  }
};

/// Convex hull of planar points, counterclockwise, collinear and duplicate points
/// removed with a relative tolerance. Returns one point, two points (a segment), or a polygon.
std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> pts, double rel_tol = 1e-10);

/// Uniform-sampling symmetric Hausdorff distance in the max-norm.
/// Throws DomainError if either set is empty.
double hausdorff_distance(const PlanarSet<double> & a, const PlanarSet<double> & b, int sample_density);

/// sup over a of dist(a, b): zero iff a lies in b up to sampling.
double directed_hausdorff(const PlanarSet<double> & a, const PlanarSet<double> & b, int sample_density);

/// Largest max-norm distance between two points of the set's primitives (arcs sampled).
double diameter(const PlanarSet<double> & a);

}  // namespace ireach
