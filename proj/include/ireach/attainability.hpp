#pragma once

#include <cstdint>
#include <vector>

#include "ireach/dynamics.hpp"
#include "ireach/planar_set.hpp"

namespace ireach {

enum class Relaxation
{
  Full,     ///< every constraint coordinate inflated by epsilon
  Partial,  ///< coordinates in J enforced exactly, the rest inflated
};

struct ReachConfig
{
  int mesh = 64;
  double epsilon = 0.01;
  int directions = 360;
  Relaxation relaxation = Relaxation::Full;
  std::uint64_t seed = 1;  ///< direction sampling for n > 2

  void validate() const;
};

/// Columns of a moment polytope: control mass lambda >= 0 with sum one reaches
/// (pi_cols * lambda, s_cols * lambda).
struct MomentColumns
{
  Eigen::MatrixXd pi;  ///< n x K
  Eigen::MatrixXd s;   ///< N x K
};

/// Projection onto the pi-coordinates of {lambda >= 0, sum lambda = 1, s_cols lambda in box},
/// approximated from inside by the hull of support points over a direction fan.
/// Empty set when the slice is infeasible.
PlanarSet<double> project_slice(const MomentColumns & cols, const Box & box, int directions, std::uint64_t seed = 1);

/// Cell-average columns of b * (pi, s) over the uniform partition with `mesh` cells.
MomentColumns mesh_columns(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons, int mesh);

/// Columns b * (pi, s) at the one-sided limits along a uniform time grid with
/// `t_grid_size` intervals plus every kernel breakpoint.
MomentColumns curve_columns(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons, int t_grid_size);

/// The box inflated as the configured relaxation prescribes.
Box relax(const Box & box, double epsilon, Relaxation relaxation, const std::vector<int> & J);

/// Reachable set of ordinary step controls on a uniform mesh under epsilon-relaxed constraints.
PlanarSet<double> relaxed_reach(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons,
                                const ReachConfig & cfg);

/// Inner approximation of the image of the constraint-satisfying generalized controls.
/// Throws PreconditionError when an exactly enforced kernel is not a step function.
PlanarSet<double> universal_mp(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons,
                               int t_grid_size, int directions = 360);

/// Attraction set of the short-impulse constraint family: arcs of b*pi over its
/// continuity intervals, the jump segments between left and right limits at the
/// breakpoints, and the two end limits.
template<typename Scalar>
PlanarSet<Scalar> short_impulse_mp(const ImpulseSystem<Scalar> & sys)
{
  sys.validate();
  const auto n = static_cast<Eigen::Index>(sys.pi.size());
  std::vector<Rat> breaks;
  for (const auto & k : sys.pi) breaks.insert(breaks.end(), k.breakpoints().begin(), k.breakpoints().end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<PiecewiseFn<Scalar>> kernels;
  for (const auto & k : sys.pi) kernels.push_back(k.refined(breaks));
  auto limit = [&](const Rat & t, Side side) {
    Vec<Scalar> v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = sys.b * side_limit(kernels[static_cast<std::size_t>(i)], t, side);
    return v;
  };

  PlanarSet<Scalar> out;
  out.dim = static_cast<int>(n);
  out.points.push_back(limit(breaks.front(), Side::Right));
  out.points.push_back(limit(breaks.back(), Side::Left));
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    Arc<Scalar> arc{breaks[k], breaks[k + 1], {}};
    bool constant = true;
    for (const auto & kern : kernels) {
      poly::Poly<Scalar> c = sys.b * kern.pieces()[k];
      constant = constant && poly::degree(c) == 0;
      arc.coords.push_back(poly::trimmed(c));
    }
    if (constant) {
      Vec<Scalar> p(n);
      for (Eigen::Index i = 0; i < n; ++i) p(i) = arc.coords[static_cast<std::size_t>(i)](0);
      out.points.push_back(p);
    } else {
      out.arcs.push_back(std::move(arc));
    }
  }
  for (std::size_t k = 1; k + 1 < breaks.size(); ++k) {
    auto up = limit(breaks[k], Side::Left);
    auto down = limit(breaks[k], Side::Right);
    if (up != down) out.segments.emplace_back(up, down);
  }
  return out;
}

struct CoincidenceEntry
{
  int mesh = 0;
  double epsilon = 0.0;
  bool full_empty = false;
  bool partial_empty = false;
  double full_vs_partial = 0.0;    ///< Hausdorff distance between the two relaxations
  double full_vs_mp = 0.0;
  double partial_vs_mp = 0.0;
  double partial_outside_full = 0.0;  ///< directed distance Partial -> Full
  double slack = 0.0;                 ///< tolerated containment defect
  bool contained = false;
};

struct CoincidenceReport
{
  std::vector<CoincidenceEntry> entries;
  bool mp_empty = false;
  bool containment = false;  ///< Partial within Full (up to slack) at every entry
  bool converging = false;   ///< distances to the universal set never increase
  double final_full_vs_mp = 0.0;
  double final_partial_vs_mp = 0.0;
};

CoincidenceReport coincidence_check(const ImpulseSystem<double> & sys, const ConstraintSpec<double> & cons,
                                    const std::vector<std::pair<int, double>> & schedule, int directions = 360,
                                    int t_grid_size = 1024, int sample_density = 1000);

}  // namespace ireach
