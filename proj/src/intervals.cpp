#include "ireach/intervals.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ireach/errors.hpp"

namespace ireach {

namespace {

// Order by left end, a closed left end first.
bool starts_before(const Interval & a, const Interval & b)
{
  if (a.lo() != b.lo()) return a.lo() < b.lo();
  if (a.lo_closed() != b.lo_closed()) return a.lo_closed();
  if (a.hi() != b.hi()) return a.hi() < b.hi();
  return !a.hi_closed() && b.hi_closed();
}

// b starts no earlier than a; do they overlap or touch without a gap?
bool joins(const Interval & a, const Interval & b)
{
  return b.lo() < a.hi() || (b.lo() == a.hi() && (a.hi_closed() || b.lo_closed()));
}

std::optional<Interval> intersect(const Interval & a, const Interval & b)
{
  Rat lo;
  bool lo_closed;
  if (a.lo() == b.lo()) {
    lo = a.lo();
    lo_closed = a.lo_closed() && b.lo_closed();
  } else if (a.lo() > b.lo()) {
    lo = a.lo();
    lo_closed = a.lo_closed();
  } else {
    lo = b.lo();
    lo_closed = b.lo_closed();
  }
  Rat hi;
  bool hi_closed;
  if (a.hi() == b.hi()) {
    hi = a.hi();
    hi_closed = a.hi_closed() && b.hi_closed();
  } else if (a.hi() < b.hi()) {
    hi = a.hi();
    hi_closed = a.hi_closed();
  } else {
    hi = b.hi();
    hi_closed = b.hi_closed();
  }
  if (!Interval::valid(lo, hi, lo_closed, hi_closed)) return std::nullopt;
  return Interval(lo, hi, lo_closed, hi_closed);
}

}  // namespace

Interval::Interval(Rat lo, Rat hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed)
{
  if (!valid(lo_, hi_, lo_closed_, hi_closed_)) {
    throw DomainError("empty or reversed interval " + format_rat(lo_) + ", " + format_rat(hi_));
  }
}

bool Interval::valid(const Rat & lo, const Rat & hi, bool lo_closed, bool hi_closed)
{
  return lo < hi || (lo == hi && lo_closed && hi_closed);
}

bool Interval::contains(const Rat & t) const
{
  bool above = lo_ < t || (lo_ == t && lo_closed_);
  bool below = t < hi_ || (t == hi_ && hi_closed_);
  return above && below;
}

Cell::Cell(std::vector<Interval> parts)
{
  std::sort(parts.begin(), parts.end(), starts_before);
  for (auto & p : parts) {
    if (!parts_.empty() && joins(parts_.back(), p)) {
      Interval & last = parts_.back();
      if (p.hi() > last.hi() || (p.hi() == last.hi() && p.hi_closed() && !last.hi_closed())) {
        last = Interval(last.lo(), p.hi(), last.lo_closed(), p.hi_closed());
      }
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

bool Cell::contains(const Rat & t) const
{
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval & p) { return p.contains(t); });
}

Cell cell_intersect(const Cell & a, const Cell & b)
{
  std::vector<Interval> out;
  for (const auto & p : a.parts()) {
    for (const auto & q : b.parts()) {
      if (auto r = intersect(p, q)) out.push_back(*r);
    }
  }
  return Cell(std::move(out));
}

Cell cell_union(const Cell & a, const Cell & b)
{
  std::vector<Interval> all = a.parts();
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return Cell(std::move(all));
}

bool is_subset(const Cell & a, const Cell & b)
{
  return cell_intersect(a, b) == a;
}

Cell cell_complement(const Cell & a, const Interval & domain)
{
  if (!is_subset(a, Cell(domain))) {
    throw DomainError("cell " + to_string(a) + " is not contained in " + to_string(domain));
  }
  std::vector<Interval> gaps;
  Rat cur = domain.lo();
  bool cur_closed = domain.lo_closed();
  for (const auto & p : a.parts()) {
    if (Interval::valid(cur, p.lo(), cur_closed, !p.lo_closed())) {
      gaps.emplace_back(cur, p.lo(), cur_closed, !p.lo_closed());
    }
    cur = p.hi();
    cur_closed = !p.hi_closed();
  }
  if (Interval::valid(cur, domain.hi(), cur_closed, domain.hi_closed())) {
    gaps.emplace_back(cur, domain.hi(), cur_closed, domain.hi_closed());
  }
  return Cell(std::move(gaps));
}

Rat eta(const Cell & a)
{
  Rat total(0);
  for (const auto & p : a.parts()) total += p.length();
  return total;
}

Partition::Partition(std::vector<Cell> cells, Interval domain)
    : cells_(std::move(cells)), domain_(std::move(domain))
{
  if (cells_.empty()) {
    throw DomainError("partition without cells");
  }
  std::vector<Interval> all;
  for (const auto & c : cells_) {
    if (c.empty()) {
      throw DomainError("partition contains an empty cell");
    }
    all.insert(all.end(), c.parts().begin(), c.parts().end());
  }
  std::sort(all.begin(), all.end(), starts_before);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto & a = all[i - 1];
    const auto & b = all[i];
    bool disjoint = a.hi() < b.lo() || (a.hi() == b.lo() && !(a.hi_closed() && b.lo_closed()));
    if (!disjoint) {
      throw DomainError("partition cells overlap at " + to_string(a) + " and " + to_string(b));
    }
  }
  if (Cell(all) != Cell(domain_)) {
    throw DomainError("partition cells do not cover " + to_string(domain_));
  }
}

Partition Partition::uniform(const Interval & domain, int m)
{
  if (m < 1) {
    throw DomainError("uniform partition needs at least one cell");
  }
  std::vector<Rat> breaks;
  for (int k = 0; k <= m; ++k) {
    breaks.push_back(domain.lo() + domain.length() * Rat(k, m));
  }
  return from_breakpoints(domain, breaks);
}

Partition Partition::from_breakpoints(const Interval & domain, const std::vector<Rat> & breakpoints)
{
  if (breakpoints.size() < 2 || breakpoints.front() != domain.lo() || breakpoints.back() != domain.hi()) {
    throw DomainError("breakpoints must start and end at the domain ends");
  }
  std::vector<Cell> cells;
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    bool first = k == 0;
    bool last = k + 2 == breakpoints.size();
    bool lo_closed = first ? domain.lo_closed() : true;
    bool hi_closed = last && domain.hi_closed();
    if (!(breakpoints[k] < breakpoints[k + 1])) {
      throw DomainError("breakpoints must be strictly increasing");
    }
    cells.emplace_back(Interval(breakpoints[k], breakpoints[k + 1], lo_closed, hi_closed));
  }
  return Partition(std::move(cells), domain);
}

bool is_finer(const Partition & fine, const Partition & coarse)
{
  return std::all_of(fine.cells().begin(), fine.cells().end(), [&](const Cell & f) {
    return std::any_of(coarse.cells().begin(), coarse.cells().end(),
                       [&](const Cell & c) { return is_subset(f, c); });
  });
}

Partition common_refinement(const Partition & a, const Partition & b)
{
  if (a.domain() != b.domain()) {
    throw DomainError("partitions over different domains");
  }
  std::vector<Cell> cells;
  for (const auto & x : a.cells()) {
    for (const auto & y : b.cells()) {
      Cell z = cell_intersect(x, y);
      if (!z.empty()) cells.push_back(std::move(z));
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell & x, const Cell & y) {
    return starts_before(x.parts().front(), y.parts().front());
  });
  return Partition(std::move(cells), a.domain());
}

std::string to_string(const Interval & i)
{
  if (i.is_point()) return "{" + format_rat(i.lo()) + "}";
  std::ostringstream os;
  os << (i.lo_closed() ? '[' : '(') << format_rat(i.lo()) << ", " << format_rat(i.hi())
     << (i.hi_closed() ? ']' : ')');
  return os.str();
}

std::string to_string(const Cell & c)
{
  if (c.empty()) return "{}";
  std::string out;
  for (const auto & p : c.parts()) {
    if (!out.empty()) out += " u ";
    out += to_string(p);
  }
  return out;
}

}  // namespace ireach
