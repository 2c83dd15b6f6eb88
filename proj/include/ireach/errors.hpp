#pragma once

#include <stdexcept>
#include <string>

namespace ireach {

/// Base of every exception raised by the library.
struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the set the operation is defined on
/// (cell outside the domain, signed measure handed to a cone operation, ...).
struct DomainError : Error
{
  using Error::Error;
};

/// A one-sided limit was requested on the side that does not exist.
struct BoundaryError : Error
{
  using Error::Error;
};

/// The result would leave the representable class (degree cap, non-step density).
struct CapacityError : Error
{
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error
{
  using Error::Error;
};

/// Linear programming or other numerical failure.
struct NumericError : Error
{
  using Error::Error;
};

/// Malformed input document (scenario, measure or function JSON).
struct ValidationError : Error
{
  using Error::Error;
};

}  // namespace ireach
