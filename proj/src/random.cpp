#include "ireach/random.hpp"

namespace ireach::random {

Interval interval(Rng & rng, const Grid & g)
{
  int a = uniform_int(rng, 0, g.steps);
  int b = uniform_int(rng, 0, g.steps);
  if (a > b) std::swap(a, b);
  if (a == b) return Interval::point(g.at(a));
  return Interval(g.at(a), g.at(b), coin(rng), coin(rng));
}

Cell cell(Rng & rng, const Grid & g, int max_parts)
{
  std::vector<Interval> parts;
  int count = uniform_int(rng, 0, max_parts);
  for (int i = 0; i < count; ++i) parts.push_back(interval(rng, g));
  return Cell(std::move(parts));
}

Partition partition(Rng & rng, const Grid & g, int max_cells)
{
  std::vector<int> ks{0, g.steps};
  int cuts = uniform_int(rng, 0, max_cells - 1);
  for (int i = 0; i < cuts; ++i) ks.push_back(uniform_int(rng, 1, g.steps - 1));
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  // At each interior breakpoint: 0 = owned by the left piece, 1 = right piece, 2 = singleton.
  std::vector<Interval> pieces;
  bool lo_closed = true;
  for (std::size_t k = 0; k + 1 < ks.size(); ++k) {
    bool last = k + 2 == ks.size();
    int owner = last ? 0 : uniform_int(rng, 0, 2);
    pieces.emplace_back(g.at(ks[k]), g.at(ks[k + 1]), lo_closed, last || owner == 0);
    if (!last && owner == 2) pieces.push_back(Interval::point(g.at(ks[k + 1])));
    lo_closed = !last && owner == 1;
  }
  int groups = uniform_int(rng, 1, std::max<int>(1, static_cast<int>(pieces.size())));
  std::vector<std::vector<Interval>> members(static_cast<std::size_t>(groups));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    int slot = i < static_cast<std::size_t>(groups) ? static_cast<int>(i) : uniform_int(rng, 0, groups - 1);
    members[static_cast<std::size_t>(slot)].push_back(pieces[i]);
  }
  std::vector<Cell> cells;
  for (auto & m : members) {
    if (!m.empty()) cells.emplace_back(std::move(m));
  }
  return Partition(std::move(cells), Interval::closed(g.t0, g.theta0));
}

std::vector<Cell> partition_of(Rng & rng, const Grid & g, const Cell & a, int max_cells)
{
  Partition p = partition(rng, g, max_cells);
  std::vector<Cell> out;
  for (const auto & c : p.cells()) {
    Cell z = cell_intersect(c, a);
    if (!z.empty()) out.push_back(std::move(z));
  }
  return out;
}

Cell null_cell(Rng & rng, const Grid & g, int max_points)
{
  std::vector<Interval> pts;
  int count = uniform_int(rng, 1, max_points);
  for (int i = 0; i < count; ++i) {
    // mix grid points with off-grid rationals
    Rat t = coin(rng) ? g.at(uniform_int(rng, 0, g.steps))
                      : g.t0 + (g.theta0 - g.t0) * Rat(uniform_int(rng, 0, 997), 997);
    pts.push_back(Interval::point(t));
  }
  return Cell(std::move(pts));
}

}  // namespace ireach::random
