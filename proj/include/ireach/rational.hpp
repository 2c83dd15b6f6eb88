#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace ireach {

/// Exact rational number, always held in lowest terms with a positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

template<typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Parses "p", "p/q", or a finite decimal such as "-0.125" / "3e-2" into an exact rational.
Rat parse_rat(std::string_view text);

/// "p/q" (or "p" when the denominator is one).
std::string format_rat(const Rat & r);

/// Exact rational value of a finite double, going through its shortest round-trip
/// decimal form so that 0.3 becomes 3/10 rather than the binary expansion.
Rat rat_from_double(double x);

template<typename Scalar>
Scalar from_rat(const Rat & r)
{
  if constexpr (std::is_same_v<Scalar, Rat>) {
    return r;
  } else {
    return static_cast<Scalar>(r);
  }
}

template<typename Scalar>
double to_double(const Scalar & x)
{
  if constexpr (std::is_same_v<Scalar, Rat>) {
    return static_cast<double>(x);
  } else {
    return static_cast<double>(x);
  }
}

template<typename To, typename From>
To scalar_cast(const From & x)
{
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, Rat>) {
    return rat_from_double(static_cast<double>(x));
  } else {
    return static_cast<To>(x);
  }
}

template<typename Scalar>
Scalar abs_value(const Scalar & x)
{
  return x < Scalar(0) ? Scalar(-x) : x;
}

}  // namespace ireach
