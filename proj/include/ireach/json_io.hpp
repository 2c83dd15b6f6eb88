#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

#include "ireach/attainability.hpp"

namespace ireach {

using json = nlohmann::json;

/// Doubles are rounded to 12 significant digits before they reach a document so
/// that output is stable across runs and platforms.
inline double round12(double x)
{
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

template<typename Scalar>
json scalar_json(const Scalar & x)
{
  if constexpr (std::is_same_v<Scalar, Rat>) {
    return format_rat(x);
  } else {
    return round12(static_cast<double>(x));
  }
}

/// Accepts "p/q" strings, decimal strings and JSON numbers.
Rat rat_from_json(const json & j);

/// Box bound: number, rational string, "inf"/"-inf", or null for the unbounded side.
double bound_from_json(const json & j, bool lower);

json to_json(const Interval & i);
json to_json(const Cell & c);
json to_json(const Partition & p);
Interval interval_from_json(const json & j);
Cell cell_from_json(const json & j);
Partition partition_from_json(const json & j, const Interval & domain);

template<typename Scalar>
json to_json(const PiecewiseFn<Scalar> & f)
{
  json out;
  out["breakpoints"] = json::array();
  for (const auto & b : f.breakpoints()) out["breakpoints"].push_back(format_rat(b));
  out["pieces"] = json::array();
  for (const auto & p : f.pieces()) {
    json coeffs = json::array();
    for (Eigen::Index k = 0; k < p.size(); ++k) coeffs.push_back(scalar_json(p(k)));
    out["pieces"].push_back(coeffs);
  }
  out["point_values"] = json::array();
  for (const auto & v : f.point_values()) out["point_values"].push_back(scalar_json(v));
  return out;
}

/// Missing point_values default to the right-continuous choice.
PiecewiseFn<Rat> piecewise_from_json(const json & j);

template<typename Scalar>
json to_json(const FAMeasure<Scalar> & mu)
{
  json out;
  out["density"] = to_json(mu.density());
  out["atoms"] = json::array();
  for (const auto & a : mu.atoms()) {
    out["atoms"].push_back(
        {{"loc", format_rat(a.loc)}, {"side", a.side == Side::Left ? "L" : "R"}, {"mass", scalar_json(a.mass)}});
  }
  return out;
}

FAMeasure<Rat> measure_from_json(const json & j);

template<typename Scalar>
json point_json(const Vec<Scalar> & p)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(scalar_json(p(i)));
  return out;
}

template<typename Scalar>
json to_json(const PlanarSet<Scalar> & s)
{
  json out;
  out["points"] = json::array();
  for (const auto & p : s.points) out["points"].push_back(point_json(p));
  out["segments"] = json::array();
  for (const auto & [a, b] : s.segments) out["segments"].push_back(json::array({point_json(a), point_json(b)}));
  out["arcs"] = json::array();
  for (const auto & arc : s.arcs) {
    json a;
    a["param"] = json::array({format_rat(arc.param_lo), format_rat(arc.param_hi)});
    auto coeffs = [](const poly::Poly<Scalar> & c) {
      json cj = json::array();
      for (Eigen::Index k = 0; k < c.size(); ++k) cj.push_back(scalar_json(c(k)));
      return cj;
    };
    if (arc.coords.size() == 2) {
      a["coeffs_x"] = coeffs(arc.coords[0]);
      a["coeffs_y"] = coeffs(arc.coords[1]);
    } else {
      a["coeffs"] = json::array();
      for (const auto & c : arc.coords) a["coeffs"].push_back(coeffs(c));
    }
    out["arcs"].push_back(a);
  }
  out["polygons"] = json::array();
  for (const auto & poly : s.polygons) {
    json pj = json::array();
    for (const auto & p : poly) pj.push_back(point_json(p));
    out["polygons"].push_back(pj);
  }
  return out;
}

/// Reads back a set written by to_json (floating-point coordinates).
PlanarSet<double> planar_set_from_json(const json & j);

json to_json(const CoincidenceReport & r);

}  // namespace ireach
