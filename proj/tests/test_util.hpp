#pragma once

#include "ireach/attainability.hpp"

namespace ireach::test {

inline Rat R(long long p, long long q = 1) { return Rat(p, q); }

inline Cell closed(Rat a, Rat b) { return Cell(Interval::closed(std::move(a), std::move(b))); }
inline Cell closed_open(Rat a, Rat b) { return Cell(Interval::closed_open(std::move(a), std::move(b))); }
inline Cell open_closed(Rat a, Rat b) { return Cell(Interval::open_closed(std::move(a), std::move(b))); }
inline Cell point(Rat a) { return Cell(Interval::point(a)); }

inline Interval unit() { return Interval::closed(R(0), R(1)); }

template<typename Scalar>
poly::Poly<Scalar> P(std::initializer_list<Scalar> c)
{
  poly::Poly<Scalar> p(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (const auto & v : c) p(i++) = v;
  return p;
}

/// c = 1 on [0, 1/2), -1 on [1/2, 1]: one thrust reversal at t = 1/2.
template<typename Scalar = Rat>
PiecewiseFn<Scalar> zigzag_c()
{
  return PiecewiseFn<Scalar>({R(0), R(1, 2), R(1)}, {P<Scalar>({Scalar(1)}), P<Scalar>({Scalar(-1)})},
                             {Scalar(1), Scalar(-1), Scalar(-1)});
}

template<typename Scalar = Rat>
PiecewiseFn<Scalar> one()
{
  return PiecewiseFn<Scalar>::constant(R(0), R(1), Scalar(1));
}

template<typename Scalar>
Vec<Scalar> vec(std::initializer_list<Scalar> c)
{
  Vec<Scalar> v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (const auto & x : c) v(i++) = x;
  return v;
}

inline PlanarSet<double> segment_set(double x0, double y0, double x1, double y1)
{
  PlanarSet<double> s;
  s.segments.emplace_back(vec<double>({x0, y0}), vec<double>({x1, y1}));
  return s;
}

inline PlanarSet<double> point_set(double x, double y)
{
  PlanarSet<double> s;
  s.points.push_back(vec<double>({x, y}));
  return s;
}

/// Dense rational sample of [0, 1]: all k/denominator plus the midpoints between them.
inline std::vector<Rat> dense_grid(int denominator = 96)
{
  std::vector<Rat> out;
  for (int k = 0; k <= 2 * denominator; ++k) out.push_back(R(k, 2 * denominator));
  return out;
}

}  // namespace ireach::test
