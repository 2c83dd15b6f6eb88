#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ireach/rational.hpp"

/// Dense univariate polynomials c0 + c1 t + ... stored as coefficient vectors.
namespace ireach::poly {

template<typename Scalar>
using Poly = Vec<Scalar>;

template<typename Scalar>
Poly<Scalar> constant(const Scalar & c)
{
  Poly<Scalar> p(1);
  p(0) = c;
  return p;
}

/// Drops trailing zero coefficients; the zero polynomial keeps one coefficient.
template<typename Scalar>
Poly<Scalar> trimmed(const Poly<Scalar> & p)
{
  Eigen::Index n = p.size();
  while (n > 1 && p(n - 1) == Scalar(0)) --n;
  if (n == 0) return constant(Scalar(0));
  return p.head(n);
}

template<typename Scalar>
int degree(const Poly<Scalar> & p)
{
  return static_cast<int>(trimmed(p).size()) - 1;
}

template<typename Scalar>
bool is_zero(const Poly<Scalar> & p)
{
  return (p.array() == Scalar(0)).all();
}

template<typename Scalar>
Scalar eval(const Poly<Scalar> & p, const Scalar & t)
{
  Scalar acc(0);
  for (Eigen::Index k = p.size(); k-- > 0;) acc = acc * t + p(k);
  return acc;
}

template<typename Scalar>
Scalar eval(const Poly<Scalar> & p, const Rat & t)
  requires(!std::is_same_v<Scalar, Rat>)
{
  return eval(p, from_rat<Scalar>(t));
}

template<typename Scalar>
Poly<Scalar> add(const Scalar & alpha, const Poly<Scalar> & p, const Scalar & beta, const Poly<Scalar> & q)
{
  Poly<Scalar> r = Poly<Scalar>::Zero(std::max(p.size(), q.size()));
  r.head(p.size()) += alpha * p;
  r.head(q.size()) += beta * q;
  return trimmed(r);
}

template<typename Scalar>
Poly<Scalar> multiply(const Poly<Scalar> & p, const Poly<Scalar> & q)
{
  Poly<Scalar> r = Poly<Scalar>::Zero(p.size() + q.size() - 1);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    for (Eigen::Index j = 0; j < q.size(); ++j) r(i + j) += p(i) * q(j);
  }
  return trimmed(r);
}

template<typename Scalar>
Poly<Scalar> derivative(const Poly<Scalar> & p)
{
  if (p.size() <= 1) return constant(Scalar(0));
  Poly<Scalar> d(p.size() - 1);
  for (Eigen::Index k = 1; k < p.size(); ++k) d(k - 1) = p(k) * Scalar(static_cast<int>(k));
  return d;
}

/// Antiderivative vanishing at t = 0.
template<typename Scalar>
Poly<Scalar> antiderivative(const Poly<Scalar> & p)
{
  Poly<Scalar> a = Poly<Scalar>::Zero(p.size() + 1);
  for (Eigen::Index k = 0; k < p.size(); ++k) a(k + 1) = p(k) / Scalar(static_cast<int>(k + 1));
  return a;
}

/// Real roots of p lying strictly inside (lo, hi). Linear polynomials are solved in
/// the coefficient field; higher degrees go through the companion-matrix eigenvalues
/// in double precision.
template<typename Scalar>
std::vector<Scalar> real_roots_between(const Poly<Scalar> & p_in, const Scalar & lo, const Scalar & hi)
{
  Poly<Scalar> p = trimmed(p_in);
  std::vector<Scalar> roots;
  int deg = static_cast<int>(p.size()) - 1;
  if (deg < 1) return roots;
  if (deg == 1) {
    Scalar r = -p(0) / p(1);
    if (lo < r && r < hi) roots.push_back(r);
    return roots;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  double lead = to_double(p(deg));
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -to_double(p(i)) / lead;
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  double lo_d = to_double(lo);
  double hi_d = to_double(hi);
  for (const std::complex<double> & z : solver.eigenvalues()) {
    double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) > 1e-9 * scale) continue;
    if (lo_d < z.real() && z.real() < hi_d) roots.push_back(scalar_cast<Scalar>(z.real()));
  }
  return roots;
}

}  // namespace ireach::poly
