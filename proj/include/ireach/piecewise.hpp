#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ireach/errors.hpp"
#include "ireach/intervals.hpp"
#include "ireach/polynomial.hpp"

namespace ireach {

enum class Side
{
  Left,
  Right
};

inline constexpr int kDefaultDegreeCap = 4;

/// Piecewise-polynomial function on [t0, theta0].
///
/// Between consecutive breakpoints the function is a polynomial in absolute time t;
/// at each breakpoint it takes a separately stored value. With every piece of
/// degree zero this is a step function; the general case stands in for the
/// uniform-limit (tiered) functions and keeps exact one-sided limits everywhere.
template<typename Scalar>
class PiecewiseFn
{
public:
  using Poly = poly::Poly<Scalar>;

  PiecewiseFn(std::vector<Rat> breakpoints, std::vector<Poly> pieces, std::vector<Scalar> point_values,
              int degree_cap = kDefaultDegreeCap)
      : breakpoints_(std::move(breakpoints)),
        pieces_(std::move(pieces)),
        point_values_(std::move(point_values)),
        degree_cap_(degree_cap)
  {
    if (breakpoints_.size() < 2) {
      throw DomainError("piecewise function needs at least two breakpoints");
    }
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
      if (!(breakpoints_[k - 1] < breakpoints_[k])) {
        throw DomainError("breakpoints must be strictly increasing");
      }
    }
    if (pieces_.size() + 1 != breakpoints_.size() || point_values_.size() != breakpoints_.size()) {
      throw DomainError("piece or point-value count does not match the breakpoints");
    }
    for (auto & p : pieces_) {
      if (p.size() == 0) p = poly::constant(Scalar(0));
      p = poly::trimmed(p);
      if (poly::degree(p) > degree_cap_) {
        throw CapacityError("piece degree " + std::to_string(poly::degree(p)) + " exceeds cap " +
                            std::to_string(degree_cap_));
      }
    }
  }

  /// Point values taken from the piece on the right (the last one from the left).
  static PiecewiseFn right_continuous(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                                      int degree_cap = kDefaultDegreeCap)
  {
    if (pieces.size() + 1 != breakpoints.size()) {
      throw DomainError("piece count does not match the breakpoints");
    }
    std::vector<Scalar> values;
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
      const Poly & p = k < pieces.size() ? pieces[k] : pieces.back();
      values.push_back(poly::eval(p, from_rat<Scalar>(breakpoints[k])));
    }
    return PiecewiseFn(std::move(breakpoints), std::move(pieces), std::move(values), degree_cap);
  }

  static PiecewiseFn polynomial(const Rat & t0, const Rat & theta0, const Poly & p)
  {
    return right_continuous({t0, theta0}, {p});
  }

  static PiecewiseFn constant(const Rat & t0, const Rat & theta0, const Scalar & c)
  {
    return polynomial(t0, theta0, poly::constant(c));
  }

  static PiecewiseFn zero(const Rat & t0, const Rat & theta0) { return constant(t0, theta0, Scalar(0)); }

  /// Step function taking values[k] on partition cell k.
  static PiecewiseFn step(const Partition & partition, const std::vector<Scalar> & values)
  {
    if (values.size() != partition.size()) {
      throw DomainError("one value per partition cell required");
    }
    const Interval & dom = partition.domain();
    std::vector<Rat> breaks{dom.lo(), dom.hi()};
    for (const auto & cell : partition.cells()) {
      for (const auto & part : cell.parts()) {
        breaks.push_back(part.lo());
        breaks.push_back(part.hi());
      }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    auto value_at = [&](const Rat & t) {
      for (std::size_t k = 0; k < partition.size(); ++k) {
        if (partition.cells()[k].contains(t)) return values[k];
      }
      return Scalar(0);
    };
    std::vector<Poly> pieces;
    std::vector<Scalar> point_values;
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      point_values.push_back(value_at(breaks[k]));
      if (k + 1 < breaks.size()) {
        pieces.push_back(poly::constant(value_at((breaks[k] + breaks[k + 1]) / 2)));
      }
    }
    return PiecewiseFn(std::move(breaks), std::move(pieces), std::move(point_values));
  }

  const std::vector<Rat> & breakpoints() const { return breakpoints_; }
  const std::vector<Poly> & pieces() const { return pieces_; }
  const std::vector<Scalar> & point_values() const { return point_values_; }
  int degree_cap() const { return degree_cap_; }
  const Rat & t0() const { return breakpoints_.front(); }
  const Rat & theta0() const { return breakpoints_.back(); }
  Interval domain() const { return Interval::closed(t0(), theta0()); }

  int degree() const
  {
    int d = 0;
    for (const auto & p : pieces_) d = std::max(d, poly::degree(p));
    return d;
  }

  bool is_step() const { return degree() == 0; }

  bool in_domain(const Rat & t) const { return t0() <= t && t <= theta0(); }

  /// Index of the piece whose open interval contains t, or of the breakpoint equal to t.
  /// Returns {index, at_breakpoint}.
  std::pair<std::size_t, bool> locate(const Rat & t) const
  {
    if (!in_domain(t)) {
      throw DomainError("time " + format_rat(t) + " outside the function domain");
    }
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (*it == t) return {idx, true};
    return {idx - 1, false};
  }

  Scalar operator()(const Rat & t) const
  {
    auto [idx, at_break] = locate(t);
    if (at_break) return point_values_[idx];
    return poly::eval(pieces_[idx], from_rat<Scalar>(t));
  }

  /// The same function described over the union of its breakpoints and `extra`
  /// (points outside the domain are ignored).
  PiecewiseFn refined(const std::vector<Rat> & extra) const
  {
    std::vector<Rat> breaks = breakpoints_;
    for (const auto & t : extra) {
      if (in_domain(t)) breaks.push_back(t);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<Poly> pieces;
    std::vector<Scalar> values;
    std::size_t src = 0;
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      values.push_back((*this)(breaks[k]));
      if (k + 1 < breaks.size()) {
        while (breakpoints_[src + 1] <= breaks[k]) ++src;
        pieces.push_back(pieces_[src]);
      }
    }
    return PiecewiseFn(std::move(breaks), std::move(pieces), std::move(values), degree_cap_);
  }

  /// Canonical form: removes every interior breakpoint across which the function is
  /// one polynomial, including the point value.
  PiecewiseFn simplified() const
  {
    std::vector<Rat> breaks{breakpoints_.front()};
    std::vector<Poly> pieces{pieces_.front()};
    std::vector<Scalar> values{point_values_.front()};
    for (std::size_t k = 1; k < pieces_.size(); ++k) {
      const Poly & left = pieces.back();
      const Poly & right = pieces_[k];
      bool same_poly = left.size() == right.size() && left == right;
      if (same_poly && poly::eval(left, from_rat<Scalar>(breakpoints_[k])) == point_values_[k]) continue;
      breaks.push_back(breakpoints_[k]);
      values.push_back(point_values_[k]);
      pieces.push_back(right);
    }
    breaks.push_back(breakpoints_.back());
    values.push_back(point_values_.back());
    return PiecewiseFn(std::move(breaks), std::move(pieces), std::move(values), degree_cap_);
  }

  template<typename To>
  PiecewiseFn<To> cast() const
  {
    std::vector<poly::Poly<To>> pieces;
    for (const auto & p : pieces_) {
      poly::Poly<To> q(p.size());
      for (Eigen::Index k = 0; k < p.size(); ++k) q(k) = scalar_cast<To>(p(k));
      pieces.push_back(q);
    }
    std::vector<To> values;
    for (const auto & v : point_values_) values.push_back(scalar_cast<To>(v));
    return PiecewiseFn<To>(breakpoints_, std::move(pieces), std::move(values), degree_cap_);
  }

private:
  std::vector<Rat> breakpoints_;
  std::vector<Poly> pieces_;
  std::vector<Scalar> point_values_;
  int degree_cap_;
};

namespace detail {

template<typename Scalar>
std::vector<Rat> merged_breakpoints(const PiecewiseFn<Scalar> & f, const PiecewiseFn<Scalar> & g)
{
  if (f.t0() != g.t0() || f.theta0() != g.theta0()) {
    throw DomainError("functions over different domains");
  }
  std::vector<Rat> all = f.breakpoints();
  all.insert(all.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace detail

/// Characteristic function of a cell over [t0, theta0].
template<typename Scalar>
PiecewiseFn<Scalar> indicator(const Cell & a, const Rat & t0, const Rat & theta0)
{
  Interval domain = Interval::closed(t0, theta0);
  if (!is_subset(a, Cell(domain))) {
    throw DomainError("indicator of a cell outside the domain");
  }
  std::vector<Rat> breaks{t0, theta0};
  for (const auto & part : a.parts()) {
    breaks.push_back(part.lo());
    breaks.push_back(part.hi());
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<poly::Poly<Scalar>> pieces;
  std::vector<Scalar> values;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    values.push_back(a.contains(breaks[k]) ? Scalar(1) : Scalar(0));
    if (k + 1 < breaks.size()) {
      pieces.push_back(poly::constant(a.contains((breaks[k] + breaks[k + 1]) / 2) ? Scalar(1) : Scalar(0)));
    }
  }
  return PiecewiseFn<Scalar>(std::move(breaks), std::move(pieces), std::move(values));
}

/// alpha f + beta g on the common breakpoint refinement.
template<typename Scalar>
PiecewiseFn<Scalar> lin_comb(const Scalar & alpha, const PiecewiseFn<Scalar> & f, const Scalar & beta,
                             const PiecewiseFn<Scalar> & g)
{
  auto breaks = detail::merged_breakpoints(f, g);
  auto fr = f.refined(breaks);
  auto gr = g.refined(breaks);
  std::vector<poly::Poly<Scalar>> pieces;
  std::vector<Scalar> values;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    values.push_back(alpha * fr.point_values()[k] + beta * gr.point_values()[k]);
    if (k + 1 < breaks.size()) pieces.push_back(poly::add(alpha, fr.pieces()[k], beta, gr.pieces()[k]));
  }
  return PiecewiseFn<Scalar>(std::move(breaks), std::move(pieces), std::move(values),
                             std::max(f.degree_cap(), g.degree_cap()));
}

template<typename Scalar>
PiecewiseFn<Scalar> operator+(const PiecewiseFn<Scalar> & f, const PiecewiseFn<Scalar> & g)
{
  return lin_comb(Scalar(1), f, Scalar(1), g);
}

template<typename Scalar>
PiecewiseFn<Scalar> operator-(const PiecewiseFn<Scalar> & f, const PiecewiseFn<Scalar> & g)
{
  return lin_comb(Scalar(1), f, Scalar(-1), g);
}

template<typename Scalar>
PiecewiseFn<Scalar> operator*(const Scalar & alpha, const PiecewiseFn<Scalar> & f)
{
  return lin_comb(alpha, f, Scalar(0), f);
}

/// Pointwise product. Throws CapacityError when a product piece exceeds the degree cap.
template<typename Scalar>
PiecewiseFn<Scalar> multiply(const PiecewiseFn<Scalar> & f, const PiecewiseFn<Scalar> & g)
{
  auto breaks = detail::merged_breakpoints(f, g);
  auto fr = f.refined(breaks);
  auto gr = g.refined(breaks);
  int cap = std::max(f.degree_cap(), g.degree_cap());
  std::vector<poly::Poly<Scalar>> pieces;
  std::vector<Scalar> values;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    values.push_back(fr.point_values()[k] * gr.point_values()[k]);
    if (k + 1 < breaks.size()) {
      auto p = poly::multiply(fr.pieces()[k], gr.pieces()[k]);
      if (poly::degree(p) > cap) {
        throw CapacityError("product degree " + std::to_string(poly::degree(p)) + " exceeds cap " +
                            std::to_string(cap));
      }
      pieces.push_back(std::move(p));
    }
  }
  return PiecewiseFn<Scalar>(std::move(breaks), std::move(pieces), std::move(values), cap);
}

template<typename Scalar>
PiecewiseFn<Scalar> operator*(const PiecewiseFn<Scalar> & f, const PiecewiseFn<Scalar> & g)
{
  return multiply(f, g);
}

/// True iff f and g agree at every point of the domain.
template<typename Scalar>
bool equivalent(const PiecewiseFn<Scalar> & f, const PiecewiseFn<Scalar> & g)
{
  auto d = f - g;
  return std::all_of(d.pieces().begin(), d.pieces().end(), [](const auto & p) { return poly::is_zero(p); }) &&
         std::all_of(d.point_values().begin(), d.point_values().end(),
                     [](const Scalar & v) { return v == Scalar(0); });
}

/// sup |f| over the domain. Each piece is maximized over its closed interval through
/// its endpoints and critical points; point values count as well.
template<typename Scalar>
Scalar sup_norm(const PiecewiseFn<Scalar> & f)
{
  Scalar best(0);
  auto consider = [&](const Scalar & v) {
    Scalar a = abs_value(v);
    if (a > best) best = a;
  };
  for (const auto & v : f.point_values()) consider(v);
  const auto & b = f.breakpoints();
  for (std::size_t k = 0; k < f.pieces().size(); ++k) {
    const auto & p = f.pieces()[k];
    Scalar lo = from_rat<Scalar>(b[k]);
    Scalar hi = from_rat<Scalar>(b[k + 1]);
    consider(poly::eval(p, lo));
    consider(poly::eval(p, hi));
    for (const auto & r : poly::real_roots_between(poly::derivative(p), lo, hi)) consider(poly::eval(p, r));
  }
  return best;
}

/// One-sided limit at t. Left needs t > t0, Right needs t < theta0.
template<typename Scalar>
Scalar side_limit(const PiecewiseFn<Scalar> & f, const Rat & t, Side side)
{
  if (!f.in_domain(t)) {
    throw DomainError("time " + format_rat(t) + " outside the function domain");
  }
  if (side == Side::Left && t <= f.t0()) {
    throw BoundaryError("no left limit at the initial time " + format_rat(t));
  }
  if (side == Side::Right && t >= f.theta0()) {
    throw BoundaryError("no right limit at the terminal time " + format_rat(t));
  }
  auto [idx, at_break] = f.locate(t);
  std::size_t piece = idx;
  if (at_break && side == Side::Left) piece = idx - 1;
  return poly::eval(f.pieces()[piece], from_rat<Scalar>(t));
}

/// Integral of f over the cell against Lebesgue measure; point values do not contribute.
template<typename Scalar>
Scalar integrate_eta(const PiecewiseFn<Scalar> & f, const Cell & a)
{
  if (!is_subset(a, Cell(f.domain()))) {
    throw DomainError("integration cell " + to_string(a) + " outside the function domain");
  }
  const auto & b = f.breakpoints();
  Scalar total(0);
  for (const auto & part : a.parts()) {
    if (part.is_point()) continue;
    auto it = std::upper_bound(b.begin(), b.end(), part.lo());
    auto k = static_cast<std::size_t>(it - b.begin()) - 1;
    for (; k + 1 < b.size() && b[k] < part.hi(); ++k) {
      const Rat & lo = std::max(b[k], part.lo());
      const Rat & hi = std::min(b[k + 1], part.hi());
      if (!(lo < hi)) continue;
      auto anti = poly::antiderivative(f.pieces()[k]);
      total += poly::eval(anti, from_rat<Scalar>(hi)) - poly::eval(anti, from_rat<Scalar>(lo));
    }
  }
  return total;
}

template<typename Scalar>
Scalar integrate_eta(const PiecewiseFn<Scalar> & f)
{
  return integrate_eta(f, Cell(f.domain()));
}

}  // namespace ireach
