// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "ireach/json_io.hpp"
#include "ireach/random.hpp"
#include "ireach/scenario.hpp"
#include "test_util.hpp"

using namespace ireach;
using namespace ireach::test;
namespace fs = std::filesystem;

namespace {

struct Outcome
{
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string & what)
  {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string & title, double time_limit, const std::function<Outcome()> & body)
{
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception & e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && secs >= time_limit) out.require(false, "runtime over " + std::to_string(time_limit) + " s");
  if (!out.ok) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof(timing), "%.3f s", secs);
  std::cout << (out.ok ? "PASS" : "FAIL") << "  AC" << id << "  " << title << "  [" << timing << "]"
            << (out.detail.empty() ? "" : "  " + out.detail) << std::endl;
}

std::string slurp(const fs::path & p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string & args)
{
  std::string cmd = std::string("\"") + IREACH_CLI + "\" " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

std::string scenario(const std::string & name) { return std::string(IREACH_SCENARIOS) + "/" + name + ".json"; }

fs::path scratch()
{
  fs::path dir = fs::temp_directory_path() / ("ireach_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

// partition of [0, 1] refining `breaks`, with each breakpoint a singleton cell
Partition isolate_points(std::vector<Rat> breaks)
{
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    cells.emplace_back(point(breaks[k]));
    if (k + 1 < breaks.size()) cells.emplace_back(Cell(Interval::open(breaks[k], breaks[k + 1])));
  }
  return Partition(cells, unit());
}

PlanarSet<double> segment01(double x1) { return segment_set(0, 1, x1, 1); }

ImpulseSystem<double> constant_thrust()
{
  return build_double_integrator(one<Rat>(), R(1, 2), R(1, 2), R(1)).system.cast<double>();
}

}  // namespace

int main()
{
  const fs::path tmp = scratch();
  random::Grid grid{R(0), R(1), 24};

  criterion(1, "zigzag short-impulse set, exact", 1.0, [&] {
    Outcome o;
    fs::path out = tmp / "zigzag.json";
    o.require(run_cli("short-impulse --scenario \"" + scenario("zigzag") + "\" --out \"" + out.string() + "\"") == 0,
              "cli exit status");
    json set = json::parse(slurp(out))["set"];
    o.require(set["points"] == json::parse(R"([["1","1"],["0","-1"]])"), "end points");
    o.require(set["segments"] == json::parse(R"([[["1/2","1"],["-1/2","-1"]]])"), "jump segment");
    json arcs = json::parse(R"([
      {"param": ["0", "1/2"], "coeffs_x": ["1", "-1"], "coeffs_y": ["1"]},
      {"param": ["1/2", "1"], "coeffs_x": ["-1", "1"], "coeffs_y": ["-1"]}])");
    o.require(set["arcs"] == arcs, "arcs");
    o.require(set["polygons"].empty(), "no polygons");
    return o;
  });

  criterion(2, "averaging exactness on step functions", 5.0, [&] {
    Outcome o;
    random::Rng rng(101);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      auto mu = random::measure<Rat>(rng, grid, true);
      auto h = random::step<Rat>(rng, grid, false);
      std::vector<Rat> breaks = h.breakpoints();
      for (const auto & a : mu.atoms()) {
        breaks.push_back(a.side == Side::Left ? Rat(a.loc - R(1, 97)) : Rat(a.loc + R(1, 97)));
        breaks.push_back(a.loc);
      }
      Partition K = isolate_points(breaks);
      o.require(integrate_eta(h * averaging(mu, K)) == integral(h, mu), "rational mismatch");
      auto muf = mu.cast<double>();
      auto hf = h.cast<double>();
      worst = std::max(worst, std::abs(integrate_eta(hf * averaging(muf, K)) - integral(hf, muf)));
    }
    o.require(worst <= 1e-12, "float deviation " + std::to_string(worst));
    return o;
  });

  criterion(3, "finite additivity", 5.0, [&] {
    Outcome o;
    random::Rng rng(102);
    for (int rep = 0; rep < 1000; ++rep) {
      auto mu = random::measure<Rat>(rng, grid, false);
      Cell L = random::cell(rng, grid);
      Rat sum(0);
      for (const auto & piece : random::partition_of(rng, grid, L)) sum += eval_cell(mu, piece);
      o.require(sum == eval_cell(mu, L), "additivity fails on " + to_string(L));
    }
    return o;
  });

  criterion(4, "integral bound and bilinearity", 0.0, [&] {
    Outcome o;
    random::Rng rng(103);
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
      auto mu = random::measure<Rat>(rng, grid, false);
      auto nu = random::measure<Rat>(rng, grid, false);
      auto u = random::piecewise<Rat>(rng, grid, 2);
      auto v = random::piecewise<Rat>(rng, grid, 2);
      Rat a = random::small_rat(rng, -3, 3);
      Rat b = random::small_rat(rng, -3, 3);
      o.require(abs_value(integral(u, mu)) <= sup_norm(u) * variation(mu), "bound");
      o.require(integral(lin_comb(a, u, b, v), mu) == a * integral(u, mu) + b * integral(v, mu), "linear in u");
      o.require(integral(u, lin_comb(a, mu, b, nu)) == a * integral(u, mu) + b * integral(u, nu), "linear in mu");
      auto uf = u.cast<double>();
      auto muf = mu.cast<double>();
      double lhs = integral(lin_comb(to_double(a), uf, to_double(b), v.cast<double>()), muf);
      double rhs = to_double(a) * integral(uf, muf) + to_double(b) * integral(v.cast<double>(), muf);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    o.require(worst <= 1e-12, "float deviation " + std::to_string(worst));
    return o;
  });

  criterion(5, "refinement direction", 0.0, [&] {
    Outcome o;
    random::Rng rng(104);
    for (int rep = 0; rep < 500; ++rep) {
      Partition a = random::partition(rng, grid);
      Partition b = random::partition(rng, grid);
      Partition r = common_refinement(a, b);
      o.require(is_finer(r, a) && is_finer(r, b), "common refinement is not finer");
      // a chain x finer than y finer than z, and an unstructured triple
      Partition z = random::partition(rng, grid);
      Partition y = common_refinement(z, random::partition(rng, grid));
      Partition x = common_refinement(y, random::partition(rng, grid));
      o.require(is_finer(x, y) && is_finer(y, z) && is_finer(x, z), "transitivity on a chain");
      o.require(!(is_finer(a, b) && is_finer(b, r)) || is_finer(a, r), "transitivity on a random triple");
    }
    return o;
  });

  criterion(6, "reach convergence for constant thrust", 30.0, [&] {
    Outcome o;
    auto sys = constant_thrust();
    auto none = ConstraintSpec<double>::none();
    ReachConfig cfg;
    cfg.directions = 360;
    cfg.mesh = 4;
    auto four = relaxed_reach(sys, none, cfg);
    o.require(four.segments.size() == 1 && four.polygons.empty() && four.points.empty(), "mesh 4 is not a segment");
    if (!four.segments.empty()) {
      auto [p, q] = four.segments[0];
      if (p(0) > q(0)) std::swap(p, q);
      o.require(p == vec<double>({0.125, 1.0}) && q == vec<double>({0.875, 1.0}), "mesh 4 endpoints");
    }
    double prev = 1e9;
    for (int m : {4, 16, 64, 256}) {
      cfg.mesh = m;
      auto set = relaxed_reach(sys, none, cfg);
      double slack = diameter(set) * (1 - std::cos(M_PI / cfg.directions));
      double d = hausdorff_distance(set, segment01(1), 1000);
      o.require(d <= 1.0 / m + slack + 1e-12, "mesh " + std::to_string(m) + " distance " + std::to_string(d));
      o.require(d < prev, "distance not decreasing at mesh " + std::to_string(m));
      prev = d;
    }
    return o;
  });

  criterion(7, "coincidence of the relaxations with the universal set", 60.0, [&] {
    Outcome o;
    Scenario sc = load_scenario_file(scenario("early_silence"));
    auto sys = sc.system.cast<double>();
    auto cons = sc.constraints.cast<double>();
    auto report = coincidence_check(sys, cons, {{64, 0.05}, {128, 0.01}, {256, 0.002}}, 360, 1024, 1000);
    o.require(!report.mp_empty, "universal set empty");
    o.require(report.converging, "distances to the universal set increase");
    o.require(report.containment, "Partial not within Full");
    const auto & last = report.entries.back();
    o.require(last.full_vs_partial <= 0.01, "Full vs Partial " + std::to_string(last.full_vs_partial));
    o.require(last.full_vs_mp <= 0.01, "Full vs universal " + std::to_string(last.full_vs_mp));
    o.require(last.partial_vs_mp <= 0.01, "Partial vs universal " + std::to_string(last.partial_vs_mp));
    auto mp = universal_mp(sys, cons, 1024);
    o.require(hausdorff_distance(mp, segment01(0.5), 1000) <= 0.01, "universal set off the limit segment");
    ReachConfig cfg{256, 0.002, 360, Relaxation::Full, 1};
    o.require(hausdorff_distance(relaxed_reach(sys, cons, cfg), segment01(0.5), 1000) <= 0.01, "Full off the limit");
    cfg.relaxation = Relaxation::Partial;
    o.require(hausdorff_distance(relaxed_reach(sys, cons, cfg), segment01(0.5), 1000) <= 0.01, "Partial off the limit");
    return o;
  });

  criterion(8, "null cells carry no mass", 0.0, [&] {
    Outcome o;
    random::Rng rng(108);
    std::vector<FAMeasure<Rat>> family = {
        FAMeasure<Rat>::zero(R(0), R(1)),
        FAMeasure<Rat>::atom(R(0), R(1), R(0), Side::Right, R(1)),
        FAMeasure<Rat>::atom(R(0), R(1), R(1), Side::Left, R(1)),
        FAMeasure<Rat>::atom(R(0), R(1), R(1, 2), Side::Left, R(-2)),
        indefinite(one<Rat>()),
        indefinite(zigzag_c()),
    };
    for (int k = 0; k < 20; ++k) family.push_back(random::measure<Rat>(rng, grid, k % 2 == 0));
    for (const auto & mu : family) {
      for (int rep = 0; rep < 500; ++rep) {
        Cell null = random::null_cell(rng, grid);
        o.require(eta(null) == 0 && eval_cell(mu, null) == 0, "mass on " + to_string(null));
      }
    }
    return o;
  });

  criterion(9, "factorization of moments through indefinite integrals", 0.0, [&] {
    Outcome o;
    random::Rng rng(109);
    auto di = build_double_integrator(zigzag_c(), R(1, 3), R(2, 3), R(3, 2));
    ConstraintSpec<Rat> cons{di.kernels, {Box::whole(2)}, {}};
    for (int rep = 0; rep < 200; ++rep) {
      auto f = random::control<Rat>(rng, grid, R(3, 2));
      auto direct = moments(f, di.system, cons);
      auto general = gen_moments(indefinite(f), di.system, cons);
      o.require(direct.pi == general.pi && direct.s == general.s, "moments differ");
    }
    return o;
  });

  criterion(10, "deterministic CLI output", 0.0, [&] {
    Outcome o;
    auto twice = [&](const std::string & cmd, const std::string & tag, bool svg) {
      for (int run = 0; run < 2; ++run) {
        std::string args = cmd + " --out \"" + (tmp / (tag + std::to_string(run) + ".json")).string() + "\"";
        if (svg) args += " --svg \"" + (tmp / (tag + std::to_string(run) + ".svg")).string() + "\"";
        o.require(run_cli(args) == 0, tag + " exit status");
      }
      o.require(slurp(tmp / (tag + "0.json")) == slurp(tmp / (tag + "1.json")), tag + " JSON differs");
      o.require(!slurp(tmp / (tag + "0.json")).empty(), tag + " JSON empty");
      if (svg) o.require(slurp(tmp / (tag + "0.svg")) == slurp(tmp / (tag + "1.svg")), tag + " SVG differs");
    };
    twice("reach --scenario \"" + scenario("early_silence") + "\" --mesh 64 --seed 5", "reach", true);
    twice("mp --scenario \"" + scenario("early_silence") + "\" --t-grid 256", "mp", true);
    twice("short-impulse --scenario \"" + scenario("zigzag") + "\"", "short", true);
    twice("traj --scenario \"" + scenario("constant_thrust") + "\" --measure \"" + scenario("atom_half_left") +
              "\" --samples 5",
          "traj", false);
    return o;
  });

  fs::remove_all(tmp);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
