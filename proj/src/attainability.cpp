#include "ireach/attainability.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ireach/simplex.hpp"

namespace ireach {

namespace {

std::vector<Eigen::VectorXd> direction_fan(int n, int directions, std::uint64_t seed)
{
  std::vector<Eigen::VectorXd> fan;
  if (n == 1) {
    fan.push_back(Eigen::VectorXd::Constant(1, 1.0));
    fan.push_back(Eigen::VectorXd::Constant(1, -1.0));
    return fan;
  }
  if (n == 2) {
    for (int k = 0; k < directions; ++k) {
      double a = 2.0 * std::numbers::pi * k / directions;
      fan.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
    }
    return fan;
  }
  for (int i = 0; i < n; ++i) {
    fan.push_back(Eigen::VectorXd::Unit(n, i));
    fan.push_back(-Eigen::VectorXd::Unit(n, i));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (static_cast<int>(fan.size()) < directions) {
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = gauss(rng);
    if (d.norm() > 1e-12) fan.push_back(d.normalized());
  }
  return fan;
}

PlanarSet<double> from_support_points(int n, const std::vector<Eigen::VectorXd> & pts)
{
  PlanarSet<double> out;
  out.dim = n;
  if (pts.empty()) return out;
  if (n == 2) {
    std::vector<Eigen::Vector2d> planar;
    for (const auto & p : pts) planar.emplace_back(p(0), p(1));
    auto hull = convex_hull(planar);
    if (hull.size() == 1) {
      out.points.emplace_back(hull[0]);
    } else if (hull.size() == 2) {
      out.segments.emplace_back(hull[0], hull[1]);
    } else {
      std::vector<Vec<double>> poly(hull.begin(), hull.end());
      out.polygons.push_back(std::move(poly));
    }
    return out;
  }
  if (n == 1) {
    double lo = pts.front()(0);
    double hi = lo;
    for (const auto & p : pts) {
      lo = std::min(lo, p(0));
      hi = std::max(hi, p(0));
    }
    if (hi - lo <= 1e-12 * (1.0 + std::abs(lo))) {
      out.points.push_back(Vec<double>::Constant(1, lo));
    } else {
      out.segments.emplace_back(Vec<double>::Constant(1, lo), Vec<double>::Constant(1, hi));
    }
    return out;
  }
  for (const auto & p : pts) {
    bool dup = std::any_of(out.points.begin(), out.points.end(),
                           [&](const auto & q) { return (p - q).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + p.norm()); });
    if (!dup) out.points.push_back(p);
  }
  return out;
}

Eigen::MatrixXd unique_columns(const Eigen::MatrixXd & m)
{
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    bool dup = std::any_of(keep.begin(), keep.end(), [&](Eigen::Index k) { return m.col(k) == m.col(j); });
    if (!dup) keep.push_back(j);
  }
  Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = m.col(keep[k]);
  return out;
}

}  // namespace

void ReachConfig::validate() const
{
  if (mesh < 1) throw DomainError("mesh must be at least 1");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (directions < 3) throw DomainError("at least three directions are required");
}

Box relax(const Box & box, double epsilon, Relaxation relaxation, const std::vector<int> & J)
{
  Box out = box;
  for (int j = 0; j < box.dimension(); ++j) {
    bool exact = relaxation == Relaxation::Partial && std::find(J.begin(), J.end(), j) != J.end();
    if (exact) continue;
    out.lo[static_cast<std::size_t>(j)] -= epsilon;
    out.hi[static_cast<std::size_t>(j)] += epsilon;
  }
  return out;
}

PlanarSet<double> project_slice(const MomentColumns & cols, const Box & box, int directions, std::uint64_t seed)
{
  const Eigen::Index K = cols.pi.cols();
  const auto n = static_cast<int>(cols.pi.rows());
  const Eigen::Index N = cols.s.rows();
  if (box.dimension() != N) throw DomainError("box dimension differs from the constraint count");

  std::vector<Eigen::Index> eq_rows;
  std::vector<std::pair<Eigen::Index, double>> le_rows;  // (row of s, sign): sign * s lambda <= bound
  std::vector<double> le_bounds;
  for (Eigen::Index j = 0; j < N; ++j) {
    double lo = box.lo[static_cast<std::size_t>(j)];
    double hi = box.hi[static_cast<std::size_t>(j)];
    if (lo == hi) {
      eq_rows.push_back(j);
      continue;
    }
    if (std::isfinite(hi)) {
      le_rows.emplace_back(j, 1.0);
      le_bounds.push_back(hi);
    }
    if (std::isfinite(lo)) {
      le_rows.emplace_back(j, -1.0);
      le_bounds.push_back(-lo);
    }
  }
  LpProblem lp;
  lp.A_eq.resize(1 + static_cast<Eigen::Index>(eq_rows.size()), K);
  lp.b_eq.resize(lp.A_eq.rows());
  lp.A_eq.row(0).setOnes();
  lp.b_eq(0) = 1.0;
  for (std::size_t r = 0; r < eq_rows.size(); ++r) {
    lp.A_eq.row(static_cast<Eigen::Index>(r + 1)) = cols.s.row(eq_rows[r]);
    lp.b_eq(static_cast<Eigen::Index>(r + 1)) = box.lo[static_cast<std::size_t>(eq_rows[r])];
  }
  lp.A_le.resize(static_cast<Eigen::Index>(le_rows.size()), K);
  lp.b_le.resize(lp.A_le.rows());
  for (std::size_t r = 0; r < le_rows.size(); ++r) {
    lp.A_le.row(static_cast<Eigen::Index>(r)) = le_rows[r].second * cols.s.row(le_rows[r].first);
    lp.b_le(static_cast<Eigen::Index>(r)) = le_bounds[r];
  }
  Simplex simplex(lp);
  if (!simplex.feasible()) {
    PlanarSet<double> empty;
    empty.dim = n;
    return empty;
  }
  std::vector<Eigen::VectorXd> support;
  for (const auto & d : direction_fan(n, directions, seed)) {
    Eigen::VectorXd objective = cols.pi.transpose() * d;
    LpSolution sol = simplex.maximize(objective);
    support.emplace_back(cols.pi * sol.x);
  }
  return from_support_points(n, support);
}

MomentColumns mesh_columns(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons, int mesh)
{
  Partition grid = Partition::uniform(Interval::closed(sys.t0, sys.theta0), mesh);
  MomentColumns cols{Eigen::MatrixXd(sys.dimension(), mesh), Eigen::MatrixXd(cons.dimension(), mesh)};
  for (int k = 0; k < mesh; ++k) {
    const Cell & cell = grid.cells()[static_cast<std::size_t>(k)];
    double weight = sys.b / static_cast<double>(eta(cell));
    for (int i = 0; i < sys.dimension(); ++i) cols.pi(i, k) = weight * integrate_eta(sys.pi[static_cast<std::size_t>(i)], cell);
    for (int j = 0; j < cons.dimension(); ++j) cols.s(j, k) = weight * integrate_eta(cons.s[static_cast<std::size_t>(j)], cell);
  }
  return cols;
}

MomentColumns curve_columns(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons, int t_grid_size)
{
  if (t_grid_size < 1) throw DomainError("time grid needs at least one interval");
  std::vector<Rat> times;
  for (int k = 0; k <= t_grid_size; ++k) times.push_back(sys.t0 + (sys.theta0 - sys.t0) * Rat(k, t_grid_size));
  for (const auto * family : {&sys.pi, &cons.s}) {
    for (const auto & f : *family) times.insert(times.end(), f.breakpoints().begin(), f.breakpoints().end());
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  const Eigen::Index rows = sys.dimension() + cons.dimension();
  Eigen::MatrixXd joint(rows, 2 * static_cast<Eigen::Index>(times.size()));
  Eigen::Index col = 0;
  for (const auto & t : times) {
    for (Side side : {Side::Left, Side::Right}) {
      if ((side == Side::Left && t == sys.t0) || (side == Side::Right && t == sys.theta0)) continue;
      for (int i = 0; i < sys.dimension(); ++i) joint(i, col) = sys.b * side_limit(sys.pi[static_cast<std::size_t>(i)], t, side);
      for (int j = 0; j < cons.dimension(); ++j) {
        joint(sys.dimension() + j, col) = sys.b * side_limit(cons.s[static_cast<std::size_t>(j)], t, side);
      }
      ++col;
    }
  }
  joint = unique_columns(joint.leftCols(col));
  return {joint.topRows(sys.dimension()), joint.bottomRows(cons.dimension())};
}

PlanarSet<double> relaxed_reach(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons,
                                const ReachConfig & cfg)
{
  cfg.validate();
  sys.validate();
  cons.validate(sys.t0, sys.theta0);
  MomentColumns cols = mesh_columns(sys, cons, cfg.mesh);
  PlanarSet<double> out;
  out.dim = sys.dimension();
  for (const auto & box : cons.Y) {
    out.append(project_slice(cols, relax(box, cfg.epsilon, cfg.relaxation, cons.J), cfg.directions, cfg.seed));
  }
  return out;
}

PlanarSet<double> universal_mp(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons,
                               int t_grid_size, int directions)
{
  sys.validate();
  cons.validate(sys.t0, sys.theta0);
  if (!cons.exact_kernels_are_step()) {
    throw PreconditionError("every exactly enforced constraint kernel must be a step function");
  }
  if (directions < 3) throw DomainError("at least three directions are required");
  MomentColumns cols = curve_columns(sys, cons, t_grid_size);
  PlanarSet<double> out;
  out.dim = sys.dimension();
  for (const auto & box : cons.Y) out.append(project_slice(cols, box, directions));
  return out;
}

CoincidenceReport coincidence_check(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons,
                                    const std::vector<std::pair<int, double>> & schedule, int directions,
                                    int t_grid_size, int sample_density)
{
  CoincidenceReport report;
  PlanarSet<double> mp = universal_mp(sys, cons, t_grid_size, directions);
  report.mp_empty = mp.empty();
  report.containment = true;
  report.converging = true;
  double fan_factor = 1.0 - std::cos(std::numbers::pi / directions);
  for (const auto & [mesh, eps] : schedule) {
    CoincidenceEntry e;
    e.mesh = mesh;
    e.epsilon = eps;
    auto full = relaxed_reach(sys, cons, {mesh, eps, directions, Relaxation::Full});
    auto partial = relaxed_reach(sys, cons, {mesh, eps, directions, Relaxation::Partial});
    e.full_empty = full.empty();
    e.partial_empty = partial.empty();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (!full.empty() && !partial.empty()) {
      e.full_vs_partial = hausdorff_distance(full, partial, sample_density);
      e.partial_outside_full = directed_hausdorff(partial, full, sample_density);
      e.slack = diameter(full) * fan_factor + 1e-9;
      e.contained = e.partial_outside_full <= e.slack;
    } else {
      e.full_vs_partial = nan;
      e.partial_outside_full = nan;
      e.contained = partial.empty();
    }
    e.full_vs_mp = full.empty() || mp.empty() ? nan : hausdorff_distance(full, mp, sample_density);
    e.partial_vs_mp = partial.empty() || mp.empty() ? nan : hausdorff_distance(partial, mp, sample_density);
    if (!report.entries.empty()) {
      const auto & prev = report.entries.back();
      if (!(e.full_vs_mp <= prev.full_vs_mp + 1e-12) || !(e.partial_vs_mp <= prev.partial_vs_mp + 1e-12)) {
        report.converging = false;
      }
    }
    report.containment = report.containment && e.contained;
    report.entries.push_back(e);
  }
  if (!report.entries.empty()) {
    report.final_full_vs_mp = report.entries.back().full_vs_mp;
    report.final_partial_vs_mp = report.entries.back().partial_vs_mp;
    if (std::isnan(report.final_full_vs_mp) || std::isnan(report.final_partial_vs_mp)) report.converging = false;
  }
  return report;
}

}  // namespace ireach
