#pragma once

#include <random>
#include <vector>

#include "ireach/measures.hpp"

/// Seeded generators of random cells, partitions, functions and measures on a
/// rational grid. Grid endpoints collide often, which exercises closedness and
/// one-sided edge cases.
namespace ireach::random {

using Rng = std::mt19937_64;

struct Grid
{
  Rat t0;
  Rat theta0;
  int steps = 24;

  Rat at(int k) const { return t0 + (theta0 - t0) * Rat(k, steps); }
};

inline int uniform_int(Rng & rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng & rng) { return uniform_int(rng, 0, 1) == 1; }

/// Small rational in [lo, hi] with denominator up to 8.
inline Rat small_rat(Rng & rng, int lo, int hi)
{
  int den = uniform_int(rng, 1, 8);
  return Rat(uniform_int(rng, lo * den, hi * den), den);
}

Interval interval(Rng & rng, const Grid & g);
Cell cell(Rng & rng, const Grid & g, int max_parts = 3);

/// Partition of the grid's closed domain into at most `max_cells` cells; breakpoints
/// are owned by either side at random or split off as singletons, and intervals are
/// sometimes grouped into multi-part cells.
Partition partition(Rng & rng, const Grid & g, int max_cells = 6);

/// Partition of an arbitrary cell: nonempty traces of a random domain partition.
std::vector<Cell> partition_of(Rng & rng, const Grid & g, const Cell & a, int max_cells = 6);

/// Finite union of singletons (a Lebesgue-null cell).
Cell null_cell(Rng & rng, const Grid & g, int max_points = 4);

template<typename Scalar>
PiecewiseFn<Scalar> step(Rng & rng, const Grid & g, bool nonnegative, int max_cells = 6)
{
  Partition p = partition(rng, g, max_cells);
  std::vector<Scalar> values;
  for (std::size_t k = 0; k < p.size(); ++k) values.push_back(from_rat<Scalar>(small_rat(rng, nonnegative ? 0 : -3, 3)));
  return PiecewiseFn<Scalar>::step(p, values);
}

/// Piecewise polynomial of degree <= max_degree with random breakpoints and point values.
template<typename Scalar>
PiecewiseFn<Scalar> piecewise(Rng & rng, const Grid & g, int max_degree = 2, int max_pieces = 5)
{
  std::vector<int> ks{0, g.steps};
  int extra = uniform_int(rng, 0, max_pieces - 1);
  for (int i = 0; i < extra; ++i) ks.push_back(uniform_int(rng, 1, g.steps - 1));
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::vector<Rat> breaks;
  for (int k : ks) breaks.push_back(g.at(k));
  std::vector<poly::Poly<Scalar>> pieces;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    poly::Poly<Scalar> p(uniform_int(rng, 0, max_degree) + 1);
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = from_rat<Scalar>(small_rat(rng, -2, 2));
    pieces.push_back(p);
  }
  std::vector<Scalar> values;
  for (std::size_t k = 0; k < breaks.size(); ++k) values.push_back(from_rat<Scalar>(small_rat(rng, -2, 2)));
  return PiecewiseFn<Scalar>(std::move(breaks), std::move(pieces), std::move(values));
}

/// Step density plus up to `max_atoms` one-sided atoms at grid points.
template<typename Scalar>
FAMeasure<Scalar> measure(Rng & rng, const Grid & g, bool nonnegative, int max_atoms = 3)
{
  auto density = step<Scalar>(rng, g, nonnegative);
  std::vector<SideAtom<Scalar>> atoms;
  int count = uniform_int(rng, 0, max_atoms);
  for (int i = 0; i < count; ++i) {
    Side side = coin(rng) ? Side::Left : Side::Right;
    int k = side == Side::Left ? uniform_int(rng, 1, g.steps) : uniform_int(rng, 0, g.steps - 1);
    Rat loc = g.at(k);
    bool taken = std::any_of(atoms.begin(), atoms.end(), [&](const auto & a) { return a.loc == loc && a.side == side; });
    if (taken) continue;
    atoms.push_back({loc, side, from_rat<Scalar>(small_rat(rng, nonnegative ? 0 : -2, 2))});
  }
  return FAMeasure<Scalar>(std::move(density), std::move(atoms));
}

/// Nonnegative step control with total mass exactly b.
template<typename Scalar>
PiecewiseFn<Scalar> control(Rng & rng, const Grid & g, const Scalar & b, int max_cells = 6)
{
  for (;;) {
    auto f = step<Scalar>(rng, g, true, max_cells);
    Scalar mass = integrate_eta(f);
    if (mass > Scalar(0)) return (b / mass) * f;
  }
}

}  // namespace ireach::random
