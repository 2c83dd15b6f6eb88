#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "ireach/piecewise.hpp"

namespace ireach {

/// Unit mass concentrated on the one-sided neighbourhoods of `loc`: a cell carries
/// the mass iff it contains an interval (loc - d, loc) (Left) or (loc, loc + d)
/// (Right) for some d > 0.
template<typename Scalar>
struct SideAtom
{
  Rat loc;
  Side side;
  Scalar mass;

  bool operator==(const SideAtom &) const = default;
};

/// Does the cell contain a one-sided neighbourhood of the atom's location?
inline bool captures(const Cell & a, const Rat & loc, Side side)
{
  return std::any_of(a.parts().begin(), a.parts().end(), [&](const Interval & p) {
    return side == Side::Left ? (p.lo() < loc && loc <= p.hi()) : (p.lo() <= loc && loc < p.hi());
  });
}

/// Finitely additive measure of bounded variation: a step density against Lebesgue
/// measure plus finitely many one-sided atoms. Every such measure vanishes on
/// Lebesgue-null cells.
template<typename Scalar>
class FAMeasure
{
public:
  FAMeasure(PiecewiseFn<Scalar> density, std::vector<SideAtom<Scalar>> atoms = {})
      : density_(std::move(density)), atoms_(std::move(atoms))
  {
    if (!density_.is_step()) {
      throw CapacityError("measure density must be a step function");
    }
    auto key = [](const SideAtom<Scalar> & a) { return std::make_tuple(a.loc, a.side == Side::Right); };
    std::sort(atoms_.begin(), atoms_.end(), [&](const auto & x, const auto & y) { return key(x) < key(y); });
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      const auto & a = atoms_[k];
      if (!density_.in_domain(a.loc)) {
        throw DomainError("atom at " + format_rat(a.loc) + " outside the domain");
      }
      if (a.side == Side::Left && a.loc <= density_.t0()) {
        throw DomainError("left atom at the initial time");
      }
      if (a.side == Side::Right && a.loc >= density_.theta0()) {
        throw DomainError("right atom at the terminal time");
      }
      if (k > 0 && key(atoms_[k - 1]) == key(a)) {
        throw DomainError("duplicate atom at " + format_rat(a.loc));
      }
    }
  }

  static FAMeasure zero(const Rat & t0, const Rat & theta0)
  {
    return FAMeasure(PiecewiseFn<Scalar>::zero(t0, theta0));
  }

  static FAMeasure atom(const Rat & t0, const Rat & theta0, const Rat & loc, Side side, const Scalar & mass)
  {
    return FAMeasure(PiecewiseFn<Scalar>::zero(t0, theta0), {{loc, side, mass}});
  }

  const PiecewiseFn<Scalar> & density() const { return density_; }
  const std::vector<SideAtom<Scalar>> & atoms() const { return atoms_; }
  const Rat & t0() const { return density_.t0(); }
  const Rat & theta0() const { return density_.theta0(); }
  Interval domain() const { return density_.domain(); }

  /// Nonnegative density and masses: membership in the cone of nonnegative measures.
  bool nonnegative() const
  {
    bool dens = std::all_of(density_.pieces().begin(), density_.pieces().end(),
                            [](const auto & p) { return p(0) >= Scalar(0); });
    bool masses = std::all_of(atoms_.begin(), atoms_.end(), [](const auto & a) { return a.mass >= Scalar(0); });
    return dens && masses;
  }

  template<typename To>
  FAMeasure<To> cast() const
  {
    std::vector<SideAtom<To>> atoms;
    for (const auto & a : atoms_) atoms.push_back({a.loc, a.side, scalar_cast<To>(a.mass)});
    return FAMeasure<To>(density_.template cast<To>(), std::move(atoms));
  }

private:
  PiecewiseFn<Scalar> density_;
  std::vector<SideAtom<Scalar>> atoms_;
};

/// alpha mu + beta nu; atoms with the same key add their masses.
template<typename Scalar>
FAMeasure<Scalar> lin_comb(const Scalar & alpha, const FAMeasure<Scalar> & mu, const Scalar & beta,
                           const FAMeasure<Scalar> & nu)
{
  std::vector<SideAtom<Scalar>> atoms;
  auto add = [&](const SideAtom<Scalar> & a, const Scalar & w) {
    for (auto & b : atoms) {
      if (b.loc == a.loc && b.side == a.side) {
        b.mass += w * a.mass;
        return;
      }
    }
    atoms.push_back({a.loc, a.side, w * a.mass});
  };
  for (const auto & a : mu.atoms()) add(a, alpha);
  for (const auto & a : nu.atoms()) add(a, beta);
  return FAMeasure<Scalar>(lin_comb(alpha, mu.density(), beta, nu.density()), std::move(atoms));
}

template<typename Scalar>
FAMeasure<Scalar> operator+(const FAMeasure<Scalar> & mu, const FAMeasure<Scalar> & nu)
{
  return lin_comb(Scalar(1), mu, Scalar(1), nu);
}

/// mu(a): density integral plus the masses of the atoms whose side neighbourhood lies in a.
template<typename Scalar>
Scalar eval_cell(const FAMeasure<Scalar> & mu, const Cell & a)
{
  Scalar total = integrate_eta(mu.density(), a);
  for (const auto & atom : mu.atoms()) {
    if (captures(a, atom.loc, atom.side)) total += atom.mass;
  }
  return total;
}

/// Total variation. Closed form for this measure class: integral of |density| plus
/// the absolute masses.
template<typename Scalar>
Scalar variation(const FAMeasure<Scalar> & mu)
{
  const auto & f = mu.density();
  Scalar total(0);
  for (std::size_t k = 0; k < f.pieces().size(); ++k) {
    Scalar len = from_rat<Scalar>(f.breakpoints()[k + 1] - f.breakpoints()[k]);
    total += abs_value(Scalar(f.pieces()[k](0))) * len;
  }
  for (const auto & a : mu.atoms()) total += abs_value(a.mass);
  return total;
}

/// Membership in the set of generalized controls of total mass b.
template<typename Scalar>
bool membership_xi(const FAMeasure<Scalar> & mu, const Scalar & b)
{
  return mu.nonnegative() && eval_cell(mu, Cell(mu.domain())) == b;
}

/// Integral of a piecewise-polynomial u: density part by exact antiderivatives,
/// each atom contributing mass times the matching one-sided limit of u.
template<typename Scalar>
Scalar integral(const PiecewiseFn<Scalar> & u, const FAMeasure<Scalar> & mu)
{
  if (u.t0() != mu.t0() || u.theta0() != mu.theta0()) {
    throw DomainError("integrand and measure over different domains");
  }
  Scalar total = integrate_eta(multiply(u, mu.density()));
  for (const auto & a : mu.atoms()) total += a.mass * side_limit(u, a.loc, a.side);
  return total;
}

/// The indefinite integral f*eta, i.e. L -> integral of f over L.
template<typename Scalar>
FAMeasure<Scalar> indefinite(const PiecewiseFn<Scalar> & f)
{
  if (!f.is_step()) {
    throw CapacityError("indefinite integrals are represented for step densities only");
  }
  return FAMeasure<Scalar>(f);
}

/// Averaging operator: the step function equal to mu(L) / eta(L) on every cell L of
/// the partition with eta(L) > 0 and to zero on null cells.
template<typename Scalar>
PiecewiseFn<Scalar> averaging(const FAMeasure<Scalar> & mu, const Partition & K)
{
  if (!mu.nonnegative()) {
    throw DomainError("averaging is defined on nonnegative measures");
  }
  if (K.domain() != mu.domain()) {
    throw DomainError("partition and measure over different domains");
  }
  std::vector<Scalar> values;
  for (const auto & cell : K.cells()) {
    Rat len = eta(cell);
    values.push_back(len > 0 ? Scalar(eval_cell(mu, cell) / from_rat<Scalar>(len)) : Scalar(0));
  }
  return PiecewiseFn<Scalar>::step(K, values);
}

}  // namespace ireach
