#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "ireach/measures.hpp"

namespace ireach {

/// Linear impulse-controlled system reduced to its terminal-moment kernels: the
/// terminal state reached by a control f is (integral of pi_i f)_i.
template<typename Scalar>
struct ImpulseSystem
{
  Rat t0;
  Rat theta0;
  Scalar b;                                  ///< total impulse
  std::vector<PiecewiseFn<Scalar>> pi;       ///< terminal-moment kernels
  std::optional<PiecewiseFn<Scalar>> c;      ///< thrust orientation of a double integrator

  void validate() const
  {
    if (!(t0 < theta0)) throw DomainError("system needs t0 < theta0");
    if (!(b > Scalar(0))) throw DomainError("total impulse b must be positive");
    if (pi.empty()) throw DomainError("system needs at least one moment kernel");
    for (const auto & k : pi) {
      if (k.t0() != t0 || k.theta0() != theta0) throw DomainError("moment kernel over a different domain");
    }
    if (c && (c->t0() != t0 || c->theta0() != theta0)) throw DomainError("thrust orientation over a different domain");
  }

  int dimension() const { return static_cast<int>(pi.size()); }

  template<typename To>
  ImpulseSystem<To> cast() const
  {
    ImpulseSystem<To> out{t0, theta0, scalar_cast<To>(b), {}, std::nullopt};
    for (const auto & k : pi) out.pi.push_back(k.template cast<To>());
    if (c) out.c = c->template cast<To>();
    return out;
  }
};

/// Axis-aligned box with closed, possibly unbounded, sides.
struct Box
{
  std::vector<double> lo;
  std::vector<double> hi;

  int dimension() const { return static_cast<int>(lo.size()); }

  bool contains(const std::vector<double> & z, double tol = 0.0) const
  {
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (z[j] < lo[j] - tol || z[j] > hi[j] + tol) return false;
    }
    return true;
  }

  static Box whole(int n)
  {
    double inf = std::numeric_limits<double>::infinity();
    return {std::vector<double>(static_cast<std::size_t>(n), -inf), std::vector<double>(static_cast<std::size_t>(n), inf)};
  }
};

/// Constraint data: kernels s_j, the target set Y as a union of boxes, and the
/// index set J (zero-based) of coordinates enforced exactly under partial relaxation.
template<typename Scalar>
struct ConstraintSpec
{
  std::vector<PiecewiseFn<Scalar>> s;
  std::vector<Box> Y;
  std::vector<int> J;

  int dimension() const { return static_cast<int>(s.size()); }

  void validate(const Rat & t0, const Rat & theta0) const
  {
    for (const auto & k : s) {
      if (k.t0() != t0 || k.theta0() != theta0) throw DomainError("constraint kernel over a different domain");
    }
    if (Y.empty()) throw DomainError("constraint target needs at least one box");
    for (const auto & box : Y) {
      if (box.dimension() != dimension() || box.hi.size() != box.lo.size()) {
        throw DomainError("constraint box dimension differs from the kernel count");
      }
      for (std::size_t j = 0; j < box.lo.size(); ++j) {
        if (std::isnan(box.lo[j]) || std::isnan(box.hi[j]) || box.lo[j] > box.hi[j]) {
          throw DomainError("empty constraint box");
        }
      }
    }
    for (int j : J) {
      if (j < 0 || j >= dimension()) throw DomainError("exact-constraint index out of range");
    }
  }

  /// Every exactly enforced kernel is a step function.
  bool exact_kernels_are_step() const
  {
    return std::all_of(J.begin(), J.end(), [&](int j) { return s[static_cast<std::size_t>(j)].is_step(); });
  }

  bool in_J(int j) const { return std::find(J.begin(), J.end(), j) != J.end(); }

  /// No constraint: zero kernels and the single (zero-dimensional) box.
  static ConstraintSpec none() { return {{}, {Box{}}, {}}; }

  template<typename To>
  ConstraintSpec<To> cast() const
  {
    ConstraintSpec<To> out{{}, Y, J};
    for (const auto & k : s) out.s.push_back(k.template cast<To>());
    return out;
  }
};

template<typename Scalar>
struct Moments
{
  Vec<Scalar> pi;  ///< terminal moments
  Vec<Scalar> s;   ///< constraint moments
};

template<typename Scalar>
struct DoubleIntegrator
{
  ImpulseSystem<Scalar> system;
  std::vector<PiecewiseFn<Scalar>> kernels;  ///< position at t1, velocity at t2
};

/// x1' = x2, x2' = c(t) u(t) on [0, 1] from rest. Terminal kernels are (1 - t) c and c;
/// the constraint kernels observe position at t1 and velocity at t2.
template<typename Scalar>
DoubleIntegrator<Scalar> build_double_integrator(const PiecewiseFn<Scalar> & c, const Rat & t1, const Rat & t2,
                                                 const Scalar & b)
{
  if (c.t0() != Rat(0) || c.theta0() != Rat(1)) {
    throw DomainError("the double integrator is posed on [0, 1]");
  }
  for (const Rat * t : {&t1, &t2}) {
    if (*t < 0 || *t > 1) throw DomainError("observation time " + format_rat(*t) + " outside [0, 1]");
  }
  using Fn = PiecewiseFn<Scalar>;
  using P = poly::Poly<Scalar>;
  P one_minus_t(2);
  one_minus_t << Scalar(1), Scalar(-1);
  P t1_minus_t(2);
  t1_minus_t << from_rat<Scalar>(t1), Scalar(-1);
  Fn pi1 = multiply(Fn::polynomial(Rat(0), Rat(1), one_minus_t), c);
  Fn s1 = multiply(multiply(Fn::polynomial(Rat(0), Rat(1), t1_minus_t), c),
                   indicator<Scalar>(Cell(Interval::closed(Rat(0), t1)), Rat(0), Rat(1)));
  Fn s2 = multiply(c, indicator<Scalar>(Cell(Interval::closed(Rat(0), t2)), Rat(0), Rat(1)));
  ImpulseSystem<Scalar> sys{Rat(0), Rat(1), b, {pi1, c}, c};
  sys.validate();
  return {std::move(sys), {std::move(s1), std::move(s2)}};
}

namespace detail {

template<typename Scalar>
bool mass_matches(const Scalar & total, const Scalar & b)
{
  if constexpr (std::is_same_v<Scalar, Rat>) {
    return total == b;
  } else {
    return std::abs(total - b) <= 1e-9 * std::max(1.0, std::abs(b));
  }
}

}  // namespace detail

/// Moments of an ordinary control: a nonnegative step density of total mass b.
template<typename Scalar>
Moments<Scalar> moments(const PiecewiseFn<Scalar> & f, const ImpulseSystem<Scalar> & sys,
                        const ConstraintSpec<Scalar> & cons)
{
  if (!f.is_step()) throw PreconditionError("controls are step functions");
  for (const auto & p : f.pieces()) {
    if (p(0) < Scalar(0)) throw PreconditionError("controls are nonnegative");
  }
  if (!detail::mass_matches(integrate_eta(f), sys.b)) {
    throw PreconditionError("control does not spend the total impulse b");
  }
  Moments<Scalar> m{Vec<Scalar>(sys.dimension()), Vec<Scalar>(cons.dimension())};
  for (int i = 0; i < sys.dimension(); ++i) m.pi(i) = integrate_eta(multiply(sys.pi[static_cast<std::size_t>(i)], f));
  for (int j = 0; j < cons.dimension(); ++j) m.s(j) = integrate_eta(multiply(cons.s[static_cast<std::size_t>(j)], f));
  return m;
}

/// Moments of a generalized control (nonnegative measure of total mass b).
template<typename Scalar>
Moments<Scalar> gen_moments(const FAMeasure<Scalar> & mu, const ImpulseSystem<Scalar> & sys,
                            const ConstraintSpec<Scalar> & cons)
{
  if (!mu.nonnegative() || !detail::mass_matches(eval_cell(mu, Cell(mu.domain())), sys.b)) {
    throw PreconditionError("measure is not a nonnegative control of total mass b");
  }
  Moments<Scalar> m{Vec<Scalar>(sys.dimension()), Vec<Scalar>(cons.dimension())};
  for (int i = 0; i < sys.dimension(); ++i) m.pi(i) = integral(sys.pi[static_cast<std::size_t>(i)], mu);
  for (int j = 0; j < cons.dimension(); ++j) m.s(j) = integral(cons.s[static_cast<std::size_t>(j)], mu);
  return m;
}

/// State of the double integrator at time t under a generalized control, starting
/// at rest. Atoms at t: Left counts, Right does not.
template<typename Scalar>
Vec<Scalar> trajectory_eval(const FAMeasure<Scalar> & mu, const Rat & t, const ImpulseSystem<Scalar> & sys)
{
  if (!sys.c) throw PreconditionError("trajectory evaluation needs a double-integrator system");
  if (t < sys.t0 || t > sys.theta0) throw DomainError("time " + format_rat(t) + " outside the domain");
  using Fn = PiecewiseFn<Scalar>;
  poly::Poly<Scalar> lever(2);
  lever << from_rat<Scalar>(t), Scalar(-1);
  Fn window = indicator<Scalar>(Cell(Interval::closed(sys.t0, t)), sys.t0, sys.theta0);
  Fn velocity_kernel = multiply(*sys.c, window);
  Fn position_kernel = multiply(Fn::polynomial(sys.t0, sys.theta0, lever), velocity_kernel);
  Vec<Scalar> x(2);
  x << integral(position_kernel, mu), integral(velocity_kernel, mu);
  return x;
}

}  // namespace ireach
