#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ireach/rational.hpp"

namespace ireach {

/// Nonempty interval of the time axis with independently open or closed ends.
/// A degenerate interval (lo == hi) is always the closed singleton {lo}.
class Interval
{
public:
  Interval(Rat lo, Rat hi, bool lo_closed, bool hi_closed);

  static Interval closed(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval open(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval closed_open(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), true, false}; }
  static Interval open_closed(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), false, true}; }
  static Interval point(const Rat & t) { return {t, t, true, true}; }

  /// True when (lo, hi, closedness) describe a nonempty set.
  static bool valid(const Rat & lo, const Rat & hi, bool lo_closed, bool hi_closed);

  const Rat & lo() const { return lo_; }
  const Rat & hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  Rat length() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rat & t) const;

  bool operator==(const Interval &) const = default;

private:
  Rat lo_;
  Rat hi_;
  bool lo_closed_;
  bool hi_closed_;
};

/// Element of the interval algebra: a finite disjoint union of intervals kept in
/// canonical form (sorted, with every pair of parts that would merge into one
/// interval merged), so that equal point sets compare equal.
class Cell
{
public:
  Cell() = default;
  explicit Cell(std::vector<Interval> parts);
  Cell(const Interval & single) : Cell(std::vector<Interval>{single}) {}  // NOLINT

  const std::vector<Interval> & parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rat & t) const;

  bool operator==(const Cell &) const = default;

private:
  std::vector<Interval> parts_;
};

Cell cell_intersect(const Cell & a, const Cell & b);
Cell cell_union(const Cell & a, const Cell & b);

/// domain \ a. Throws DomainError when a is not contained in the domain.
Cell cell_complement(const Cell & a, const Interval & domain);

bool is_subset(const Cell & a, const Cell & b);

/// Trace of Lebesgue measure: total length of the parts.
Rat eta(const Cell & a);

/// Finite disjoint family of nonempty cells covering the domain.
class Partition
{
public:
  /// Validates disjointness and coverage; throws DomainError otherwise.
  Partition(std::vector<Cell> cells, Interval domain);

  /// m cells [a_k, a_{k+1}) of equal length; the last cell inherits the domain's right end.
  static Partition uniform(const Interval & domain, int m);

  /// Cells between consecutive breakpoints, half-open to the right like uniform().
  static Partition from_breakpoints(const Interval & domain, const std::vector<Rat> & breakpoints);

  const std::vector<Cell> & cells() const { return cells_; }
  const Interval & domain() const { return domain_; }
  std::size_t size() const { return cells_.size(); }

private:
  std::vector<Cell> cells_;
  Interval domain_;
};

/// True iff every cell of `fine` lies inside some cell of `coarse`.
bool is_finer(const Partition & fine, const Partition & coarse);

/// Nonempty pairwise intersections of the two partitions' cells.
Partition common_refinement(const Partition & a, const Partition & b);

std::string to_string(const Interval & i);
std::string to_string(const Cell & c);

}  // namespace ireach
