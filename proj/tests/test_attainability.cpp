#include <cmath>
#include <optional>

#include "doctest.h"
#include "ireach/json_io.hpp"
#include "test_util.hpp"

using namespace ireach;
using namespace ireach::test;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ImpulseSystem<double> thrust(const PiecewiseFn<Rat> & c, double b = 1.0)
{
  auto sys = build_double_integrator(c, R(1, 2), R(1, 2), R(1)).system.cast<double>();
  sys.b = b;
  return sys;
}

PiecewiseFn<Rat> first_half() { return indicator<Rat>(closed(R(0), R(1, 2)), R(0), R(1)); }

ConstraintSpec<double> early_silence()
{
  // the control spends nothing on [0, 1/2]
  return ConstraintSpec<Rat>{{first_half()}, {Box{{0.0}, {0.0}}}, {0}}.cast<double>();
}

// every point of the set
std::vector<Eigen::Vector2d> vertices(const PlanarSet<double> & s)
{
  std::vector<Eigen::Vector2d> out;
  for (const auto & p : s.points) out.emplace_back(p(0), p(1));
  for (const auto & [a, b] : s.segments) {
    out.emplace_back(a(0), a(1));
    out.emplace_back(b(0), b(1));
  }
  for (const auto & poly : s.polygons) {
    for (const auto & p : poly) out.emplace_back(p(0), p(1));
  }
  return out;
}

PiecewiseFn<double> ramp_kernel() { return PiecewiseFn<double>::polynomial(R(0), R(1), P<double>({0.0, 1.0})); }

}  // namespace

TEST_CASE("relaxed reach without constraints")
{
  auto sys = thrust(one<Rat>());
  ReachConfig cfg;
  cfg.mesh = 4;
  auto set = relaxed_reach(sys, ConstraintSpec<double>::none(), cfg);
  REQUIRE(set.segments.size() == 1);
  CHECK(set.polygons.empty());
  CHECK(hausdorff_distance(set, segment_set(0.125, 1, 0.875, 1), 1000) < 1e-9);

  // a constraint that never binds leaves the set unchanged
  auto di = build_double_integrator(one<Rat>(), R(1, 2), R(1, 2), R(1));
  ConstraintSpec<double> loose{{di.kernels[0].cast<double>(), di.kernels[1].cast<double>()},
                               {Box{{-kInf, -10.0}, {kInf, 10.0}}}, {}};
  auto same = relaxed_reach(sys, loose, cfg);
  CHECK(hausdorff_distance(set, same, 1000) < 1e-9);
}

TEST_CASE("relaxed reach under an exact step constraint")
{
  auto sys = thrust(one<Rat>());
  ReachConfig cfg;
  cfg.mesh = 256;
  cfg.epsilon = 0.002;
  cfg.relaxation = Relaxation::Partial;
  auto set = relaxed_reach(sys, early_silence(), cfg);
  REQUIRE_FALSE(set.empty());
  CHECK(hausdorff_distance(set, segment_set(0, 1, 0.5, 1), 1000) <= 0.01);
}

TEST_CASE("relaxed reach is empty when no box can be met")
{
  auto sys = thrust(one<Rat>());
  ConstraintSpec<double> far{{first_half().cast<double>()}, {Box{{5.0}, {6.0}}}, {}};
  CHECK(relaxed_reach(sys, far, ReachConfig{}).empty());
}

TEST_CASE("reach converges to the limit segment")
{
  auto sys = thrust(one<Rat>());
  double prev = 1e9;
  for (int m : {4, 16, 64}) {
    ReachConfig cfg;
    cfg.mesh = m;
    double d = hausdorff_distance(relaxed_reach(sys, ConstraintSpec<double>::none(), cfg), segment_set(0, 1, 1, 1), 1000);
    CHECK(d <= 1.0 / m + 1e-9);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("universal attraction set")
{
  auto sys = thrust(one<Rat>());
  auto free = universal_mp(sys, ConstraintSpec<double>::none(), 64);
  CHECK(hausdorff_distance(free, segment_set(0, 1, 1, 1), 1000) < 1e-9);

  auto constrained = universal_mp(sys, early_silence(), 64);
  CHECK(hausdorff_distance(constrained, segment_set(0, 1, 0.5, 1), 1000) < 1e-9);

  ConstraintSpec<double> far{{first_half().cast<double>()}, {Box{{2.0}, {3.0}}}, {0}};
  CHECK(universal_mp(sys, far, 64).empty());

  ConstraintSpec<double> ramp{{ramp_kernel()}, {Box{{0.0}, {0.0}}}, {0}};
  CHECK_THROWS_AS(universal_mp(sys, ramp, 64), PreconditionError);
}

TEST_CASE("universal set against two-atom enumeration")
{
  // every measure m1 delta_(t1,side1) + m2 delta_(t2,side2) on a grid with the constraint met exactly
  auto zz = build_double_integrator(zigzag_c(), R(1, 2), R(1, 3), R(1));
  auto sys = zz.system.cast<double>();
  ConstraintSpec<double> cons{{zz.kernels[1].cast<double>()}, {Box{{0.0}, {0.0}}}, {0}};
  auto set = universal_mp(sys, cons, 48);

  std::vector<std::pair<Rat, Side>> atoms;
  for (int k = 0; k <= 48; ++k) {
    Rat t(k, 48);
    if (k > 0) atoms.emplace_back(t, Side::Left);
    if (k < 48) atoms.emplace_back(t, Side::Right);
  }
  auto lim = [&](const PiecewiseFn<Rat> & f, const std::pair<Rat, Side> & a) { return side_limit(f, a.first, a.second); };
  std::vector<Eigen::Vector2d> feasible;
  for (const auto & a : atoms) {
    for (const auto & b : atoms) {
      Rat sa = lim(zz.kernels[1], a);
      Rat sb = lim(zz.kernels[1], b);
      // m sa + (1 - m) sb = 0 with m in [0, 1]
      std::optional<Rat> m;
      if (sa == sb) {
        if (sa == 0) m = Rat(1);
      } else {
        Rat cand = -sb / (sa - sb);
        if (cand >= 0 && cand <= 1) m = cand;
      }
      if (!m) continue;
      Rat x = *m * lim(zz.system.pi[0], a) + (Rat(1) - *m) * lim(zz.system.pi[0], b);
      Rat y = *m * lim(zz.system.pi[1], a) + (Rat(1) - *m) * lim(zz.system.pi[1], b);
      feasible.emplace_back(to_double(x), to_double(y));
    }
  }
  auto hull = convex_hull(feasible);
  PlanarSet<double> oracle;
  if (hull.size() == 2) {
    oracle.segments.emplace_back(vec<double>({hull[0].x(), hull[0].y()}), vec<double>({hull[1].x(), hull[1].y()}));
  } else {
    std::vector<Vec<double>> poly;
    for (const auto & p : hull) poly.push_back(vec<double>({p.x(), p.y()}));
    oracle.polygons.push_back(poly);
  }
  CHECK(hausdorff_distance(set, oracle, 1000) < 0.01);
  // the computed set never leaves the oracle hull
  CHECK(directed_hausdorff(set, oracle, 1000) < 1e-6);
}

TEST_CASE("short-impulse set of the zigzag system is exact")
{
  auto sys = build_double_integrator(zigzag_c(), R(1, 2), R(1, 2), R(1)).system;
  auto set = short_impulse_mp(sys);
  REQUIRE(set.points.size() == 2);
  CHECK(set.points[0] == vec<Rat>({R(1), R(1)}));
  CHECK(set.points[1] == vec<Rat>({R(0), R(-1)}));
  REQUIRE(set.arcs.size() == 2);
  CHECK(set.arcs[0].param_lo == 0);
  CHECK(set.arcs[0].param_hi == R(1, 2));
  CHECK(set.arcs[0].at(R(1, 4)) == vec<Rat>({R(3, 4), R(1)}));
  CHECK(set.arcs[1].param_lo == R(1, 2));
  CHECK(set.arcs[1].at(R(3, 4)) == vec<Rat>({R(-1, 4), R(-1)}));
  REQUIRE(set.segments.size() == 1);
  CHECK(set.segments[0].first == vec<Rat>({R(1, 2), R(1)}));
  CHECK(set.segments[0].second == vec<Rat>({R(-1, 2), R(-1)}));

  auto smooth = short_impulse_mp(build_double_integrator(one<Rat>(), R(1), R(1), R(1)).system);
  CHECK(smooth.segments.empty());
  CHECK(smooth.arcs.size() == 1);
}

TEST_CASE("short-impulse set scales with b")
{
  auto sys = build_double_integrator(zigzag_c(), R(1, 2), R(1, 2), R(1)).system;
  auto base = short_impulse_mp(sys);
  sys.b = R(5, 2);
  auto scaled = short_impulse_mp(sys);
  for (std::size_t i = 0; i < base.points.size(); ++i) CHECK(scaled.points[i] == (R(5, 2) * base.points[i]).eval());
  CHECK(scaled.segments[0].first == (R(5, 2) * base.segments[0].first).eval());
  CHECK(scaled.arcs[1].at(R(2, 3)) == (R(5, 2) * base.arcs[1].at(R(2, 3))).eval());
}

TEST_CASE("Hausdorff distance")
{
  auto s = segment_set(0, 0, 1, 0);
  CHECK(hausdorff_distance(s, s, 1000) == 0);
  CHECK(hausdorff_distance(s, point_set(0, 0), 1000) == doctest::Approx(1));
  CHECK(directed_hausdorff(point_set(0.5, 0), s, 1000) == 0);
  CHECK_THROWS_AS(hausdorff_distance(s, PlanarSet<double>{}, 1000), DomainError);
  PlanarSet<double> square;
  square.polygons.push_back({vec<double>({0, 0}), vec<double>({1, 0}), vec<double>({1, 1}), vec<double>({0, 1})});
  CHECK(directed_hausdorff(point_set(0.5, 0.5), square, 1000) == 0);
  CHECK(directed_hausdorff(point_set(2, 0.5), square, 1000) == doctest::Approx(1));
  CHECK(hausdorff_distance(square, segment_set(0, 0, 1, 0), 1000) == doctest::Approx(1));
}

TEST_CASE("coincidence check")
{
  auto sys = thrust(one<Rat>());
  ConstraintSpec<double> noJ = early_silence();
  noJ.J.clear();
  auto none = coincidence_check(sys, noJ, {{32, 0.05}}, 180, 256);
  REQUIRE(none.entries.size() == 1);
  CHECK(none.entries[0].full_vs_partial < 1e-12);
  ReachConfig cfg;
  cfg.mesh = 32;
  cfg.epsilon = 0.05;
  auto full = relaxed_reach(sys, noJ, cfg);
  cfg.relaxation = Relaxation::Partial;
  auto partial = relaxed_reach(sys, noJ, cfg);
  CHECK(to_json(full) == to_json(partial));

  // J covers every kernel and all of them are step functions: Partial matches the exact constraint for any epsilon
  auto all = early_silence();
  for (double eps : {0.5, 0.05}) {
    ReachConfig cfg;
    cfg.mesh = 32;
    cfg.epsilon = eps;
    cfg.relaxation = Relaxation::Partial;
    auto a = relaxed_reach(sys, all, cfg);
    cfg.epsilon = 1e-6;
    CHECK(hausdorff_distance(a, relaxed_reach(sys, all, cfg), 1000) < 1e-9);
  }

  auto report = coincidence_check(sys, early_silence(), {{64, 0.05}, {128, 0.01}, {256, 0.002}});
  CHECK(report.containment);
  CHECK(report.converging);
  CHECK(report.final_full_vs_mp <= 0.01);
  CHECK(report.final_partial_vs_mp <= 0.01);
}

TEST_CASE("reach properties")
{
  auto sys = thrust(zigzag_c());
  auto di = build_double_integrator(zigzag_c(), R(1, 3), R(2, 3), R(1));
  ConstraintSpec<double> cons{{di.kernels[0].cast<double>(), di.kernels[1].cast<double>()},
                              {Box{{0.0, -0.1}, {0.05, 0.1}}}, {1}};
  const int D = 360;
  ReachConfig cfg;
  cfg.mesh = 48;
  cfg.directions = D;
  double prev_eps = 0;
  PlanarSet<double> prev;
  for (double eps : {0.01, 0.05, 0.2}) {
    cfg.epsilon = eps;
    cfg.relaxation = Relaxation::Full;
    auto full = relaxed_reach(sys, cons, cfg);
    cfg.relaxation = Relaxation::Partial;
    auto partial = relaxed_reach(sys, cons, cfg);
    REQUIRE_FALSE(full.empty());
    double slack = diameter(full) * (1 - std::cos(M_PI / D)) + 1e-9;
    if (!partial.empty()) CHECK(directed_hausdorff(partial, full, 1000) <= slack);
    if (prev_eps > 0 && !prev.empty()) CHECK(directed_hausdorff(prev, full, 1000) <= slack);
    // one convex piece per box
    CHECK(full.polygons.size() + full.segments.size() + full.points.size() == 1);
    for (const auto & poly : full.polygons) {
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto & a = poly[i];
        const auto & b = poly[(i + 1) % poly.size()];
        const auto & c = poly[(i + 2) % poly.size()];
        CHECK((b(0) - a(0)) * (c(1) - a(1)) - (b(1) - a(1)) * (c(0) - a(0)) >= -1e-12);
      }
    }
    prev = full;
    prev_eps = eps;
  }
}

TEST_CASE("finer time grids enlarge the universal set")
{
  auto sys = thrust(zigzag_c());
  auto di = build_double_integrator(zigzag_c(), R(1, 3), R(2, 3), R(1));
  ConstraintSpec<double> cons{{di.kernels[1].cast<double>()}, {Box{{-0.2}, {0.2}}}, {0}};
  auto coarse = universal_mp(sys, cons, 16);
  auto fine = universal_mp(sys, cons, 64);
  const double slack = diameter(fine) * (1 - std::cos(M_PI / 360)) + 1e-9;
  CHECK(directed_hausdorff(coarse, fine, 1000) <= slack);
  for (const auto & v : vertices(coarse)) CHECK(directed_hausdorff(point_set(v.x(), v.y()), fine, 10) <= slack);
}
