#include "ireach/json_io.hpp"

#include <limits>

namespace ireach {

namespace {

const json & require(const json & j, const char * key)
{
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

bool require_bool(const json & j, const char * key)
{
  const json & v = require(j, key);
  if (!v.is_boolean()) throw ValidationError(std::string("field '") + key + "' must be boolean");
  return v.get<bool>();
}

Vec<double> point_from_json(const json & j)
{
  if (!j.is_array()) throw ValidationError("point must be an array");
  Vec<double> p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) p(static_cast<Eigen::Index>(i)) = static_cast<double>(rat_from_json(j[i]));
  return p;
}

poly::Poly<double> coeffs_from_json(const json & j)
{
  if (!j.is_array() || j.empty()) throw ValidationError("coefficient list must be a nonempty array");
  poly::Poly<double> c(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) c(static_cast<Eigen::Index>(i)) = static_cast<double>(rat_from_json(j[i]));
  return c;
}

}  // namespace

Rat rat_from_json(const json & j)
{
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) {
    // the shortest decimal form of the literal is the intended value
    return parse_rat(j.dump());
  }
  throw ValidationError("expected a number or a \"p/q\" string, got " + j.dump());
}

double bound_from_json(const json & j, bool lower)
{
  const double inf = std::numeric_limits<double>::infinity();
  if (j.is_null()) return lower ? -inf : inf;
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return inf;
    if (s == "-inf") return -inf;
  }
  return static_cast<double>(rat_from_json(j));
}

json to_json(const Interval & i)
{
  return {{"lo", format_rat(i.lo())}, {"hi", format_rat(i.hi())}, {"lo_closed", i.lo_closed()},
          {"hi_closed", i.hi_closed()}};
}

json to_json(const Cell & c)
{
  json out = json::array();
  for (const auto & p : c.parts()) out.push_back(to_json(p));
  return out;
}

json to_json(const Partition & p)
{
  json out = json::array();
  for (const auto & c : p.cells()) out.push_back(to_json(c));
  return out;
}

Interval interval_from_json(const json & j)
{
  try {
    return Interval(rat_from_json(require(j, "lo")), rat_from_json(require(j, "hi")), require_bool(j, "lo_closed"),
                    require_bool(j, "hi_closed"));
  } catch (const DomainError & e) {
    throw ValidationError(e.what());
  }
}

Cell cell_from_json(const json & j)
{
  if (!j.is_array()) throw ValidationError("cell must be a list of intervals");
  std::vector<Interval> parts;
  for (const auto & p : j) parts.push_back(interval_from_json(p));
  return Cell(std::move(parts));
}

Partition partition_from_json(const json & j, const Interval & domain)
{
  if (!j.is_array()) throw ValidationError("partition must be a list of cells");
  std::vector<Cell> cells;
  for (const auto & c : j) cells.push_back(cell_from_json(c));
  try {
    return Partition(std::move(cells), domain);
  } catch (const DomainError & e) {
    throw ValidationError(e.what());
  }
}

PiecewiseFn<Rat> piecewise_from_json(const json & j)
{
  const json & bj = require(j, "breakpoints");
  const json & pj = require(j, "pieces");
  if (!bj.is_array() || !pj.is_array()) throw ValidationError("breakpoints and pieces must be arrays");
  std::vector<Rat> breaks;
  for (const auto & b : bj) breaks.push_back(rat_from_json(b));
  std::vector<poly::Poly<Rat>> pieces;
  for (const auto & p : pj) {
    if (!p.is_array() || p.empty()) throw ValidationError("each piece must be a nonempty coefficient list");
    poly::Poly<Rat> c(static_cast<Eigen::Index>(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k) c(static_cast<Eigen::Index>(k)) = rat_from_json(p[k]);
    pieces.push_back(c);
  }
  try {
    if (j.contains("point_values")) {
      std::vector<Rat> values;
      for (const auto & v : j.at("point_values")) values.push_back(rat_from_json(v));
      return PiecewiseFn<Rat>(std::move(breaks), std::move(pieces), std::move(values));
    }
    return PiecewiseFn<Rat>::right_continuous(std::move(breaks), std::move(pieces));
  } catch (const DomainError & e) {
    throw ValidationError(e.what());
  } catch (const CapacityError & e) {
    throw ValidationError(e.what());
  }
}

FAMeasure<Rat> measure_from_json(const json & j)
{
  PiecewiseFn<Rat> density = piecewise_from_json(require(j, "density"));
  std::vector<SideAtom<Rat>> atoms;
  if (j.contains("atoms")) {
    for (const auto & a : j.at("atoms")) {
      std::string side = require(a, "side").get<std::string>();
      if (side != "L" && side != "R") throw ValidationError("atom side must be \"L\" or \"R\"");
      atoms.push_back({rat_from_json(require(a, "loc")), side == "L" ? Side::Left : Side::Right,
                       rat_from_json(require(a, "mass"))});
    }
  }
  try {
    return FAMeasure<Rat>(std::move(density), std::move(atoms));
  } catch (const DomainError & e) {
    throw ValidationError(e.what());
  } catch (const CapacityError & e) {
    throw ValidationError(e.what());
  }
}

PlanarSet<double> planar_set_from_json(const json & j)
{
  PlanarSet<double> s;
  int dim = -1;
  auto track = [&](const Vec<double> & p) {
    if (dim >= 0 && p.size() != dim) throw ValidationError("mixed point dimensions in set");
    dim = static_cast<int>(p.size());
    return p;
  };
  for (const auto & p : require(j, "points")) s.points.push_back(track(point_from_json(p)));
  for (const auto & seg : require(j, "segments")) {
    s.segments.emplace_back(track(point_from_json(seg.at(0))), track(point_from_json(seg.at(1))));
  }
  for (const auto & a : require(j, "arcs")) {
    Arc<double> arc{rat_from_json(a.at("param").at(0)), rat_from_json(a.at("param").at(1)), {}};
    if (a.contains("coeffs_x")) {
      arc.coords = {coeffs_from_json(a.at("coeffs_x")), coeffs_from_json(a.at("coeffs_y"))};
    } else {
      for (const auto & c : a.at("coeffs")) arc.coords.push_back(coeffs_from_json(c));
    }
    if (dim >= 0 && static_cast<int>(arc.coords.size()) != dim) throw ValidationError("mixed dimensions in set");
    dim = static_cast<int>(arc.coords.size());
    s.arcs.push_back(std::move(arc));
  }
  for (const auto & poly : require(j, "polygons")) {
    std::vector<Vec<double>> vs;
    for (const auto & p : poly) vs.push_back(track(point_from_json(p)));
    s.polygons.push_back(std::move(vs));
  }
  s.dim = dim < 0 ? 2 : dim;
  return s;
}

json to_json(const CoincidenceReport & r)
{
  auto num = [](double x) -> json {
    if (std::isnan(x)) return nullptr;
    return round12(x);
  };
  json entries = json::array();
  for (const auto & e : r.entries) {
    entries.push_back({{"mesh", e.mesh},
                       {"epsilon", round12(e.epsilon)},
                       {"full_empty", e.full_empty},
                       {"partial_empty", e.partial_empty},
                       {"full_vs_partial", num(e.full_vs_partial)},
                       {"full_vs_mp", num(e.full_vs_mp)},
                       {"partial_vs_mp", num(e.partial_vs_mp)},
                       {"partial_outside_full", num(e.partial_outside_full)},
                       {"slack", num(e.slack)},
                       {"contained", e.contained}});
  }
  return {{"entries", entries},
          {"mp_empty", r.mp_empty},
          {"containment", r.containment},
          {"converging", r.converging},
          {"final_full_vs_mp", num(r.final_full_vs_mp)},
          {"final_partial_vs_mp", num(r.final_partial_vs_mp)}};
}

}  // namespace ireach
