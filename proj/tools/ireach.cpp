// Command-line front end: reachable sets, attraction sets, trajectories and
// invariant checks for impulse-constrained linear systems described by a scenario file.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ireach/scenario.hpp"
#include "ireach/svg.hpp"

namespace {

using namespace ireach;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

struct Flags
{
  std::string scenario;
  std::string out;
  std::string svg;
  std::optional<int> mesh;
  std::optional<double> epsilon;
  std::optional<int> directions;
  std::optional<int> t_grid;
  std::string measure;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
};

void emit(const std::string & text, const std::string & path)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

void emit_json(const json & doc, const std::string & path)
{
  emit(doc.dump(2) + "\n", path);
}

void maybe_svg(const PlanarSet<double> & set, const Flags & f, const std::string & title)
{
  if (f.svg.empty()) return;
  SvgStyle style;
  style.title = title;
  write_svg(set, f.svg, style);
}

std::string fmt12(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

int cmd_reach(const Scenario & sc, const Flags & f)
{
  ReachConfig cfg{f.mesh.value_or(sc.task.mesh), f.epsilon.value_or(sc.task.epsilon),
                  f.directions.value_or(sc.task.directions), sc.task.relaxation, f.seed.value_or(sc.task.seed)};
  auto set = relaxed_reach(sc.system.cast<double>(), sc.constraints.cast<double>(), cfg);
  json doc{{"command", "reach"},
           {"scenario", sc.name},
           {"mesh", cfg.mesh},
           {"epsilon", round12(cfg.epsilon)},
           {"directions", cfg.directions},
           {"relaxation", cfg.relaxation == Relaxation::Full ? "full" : "partial"},
           {"feasible", !set.empty()},
           {"set", to_json(set)}};
  emit_json(doc, f.out);
  maybe_svg(set, f, sc.name + " reach");
  return kExitOk;
}

int cmd_mp(const Scenario & sc, const Flags & f)
{
  int grid = f.t_grid.value_or(sc.task.t_grid);
  int dirs = f.directions.value_or(sc.task.directions);
  auto set = universal_mp(sc.system.cast<double>(), sc.constraints.cast<double>(), grid, dirs);
  json doc{{"command", "mp"},       {"scenario", sc.name},       {"t_grid", grid},
           {"directions", dirs},    {"feasible", !set.empty()}, {"set", to_json(set)}};
  emit_json(doc, f.out);
  maybe_svg(set, f, sc.name + " attraction set");
  return kExitOk;
}

int cmd_short_impulse(const Scenario & sc, const Flags & f)
{
  auto set = short_impulse_mp(sc.system);
  json doc{{"command", "short-impulse"}, {"scenario", sc.name}, {"set", to_json(set)}};
  emit_json(doc, f.out);
  maybe_svg(set.cast<double>(), f, sc.name + " short-impulse attraction set");
  return kExitOk;
}

int cmd_traj(const Scenario & sc, const Flags & f)
{
  if (f.measure.empty()) throw ValidationError("traj needs --measure");
  auto mu = measure_from_json(read_json_file(f.measure));
  int samples = f.samples.value_or(sc.task.samples);
  if (samples < 2) throw ValidationError("--samples must be at least 2");
  std::string csv = "t,x1,x2\n";
  const auto & sys = sc.system;
  for (int k = 0; k < samples; ++k) {
    Rat t = sys.t0 + (sys.theta0 - sys.t0) * Rat(k, samples - 1);
    auto x = trajectory_eval(mu, t, sys);
    csv += fmt12(static_cast<double>(t)) + "," + fmt12(static_cast<double>(x(0))) + "," +
           fmt12(static_cast<double>(x(1))) + "\n";
  }
  emit(csv, f.out);
  return kExitOk;
}

int cmd_check(const Scenario & sc, const Flags & f)
{
  std::optional<FAMeasure<Rat>> mu;
  if (!f.measure.empty()) mu = measure_from_json(read_json_file(f.measure));
  auto results = run_checks(sc, mu, f.seed.value_or(sc.task.seed));
  json report{{"command", "check"}, {"scenario", sc.name}, {"checks", json::array()}};
  if (!sc.task.schedule.empty()) {
    auto coincidence = coincidence_check(sc.system.cast<double>(), sc.constraints.cast<double>(), sc.task.schedule,
                                         f.directions.value_or(sc.task.directions),
                                         f.t_grid.value_or(sc.task.t_grid), sc.task.sample_density);
    results.push_back({"attainability: partial relaxation within full relaxation", coincidence.containment, {}});
    results.push_back({"attainability: relaxations approach the universal attraction set", coincidence.converging, {}});
    report["coincidence"] = to_json(coincidence);
  }
  bool all = true;
  for (const auto & r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    report["checks"].push_back({{"name", r.name}, {"passed", r.passed}});
    all = all && r.passed;
  }
  report["passed"] = all;
  if (!f.out.empty()) emit_json(report, f.out);
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Reachable and attraction sets of impulse-constrained linear systems"};
  app.require_subcommand(1);
  Flags flags;
  auto common = [&](CLI::App * sub) {
    sub->add_option("--scenario", flags.scenario, "scenario JSON file")->required();
    sub->add_option("--out", flags.out, "output file (default: stdout)");
    sub->add_option("--svg", flags.svg, "also render the set as SVG");
    sub->add_option("--mesh", flags.mesh, "uniform partition size for reach");
    sub->add_option("--epsilon", flags.epsilon, "constraint relaxation radius");
    sub->add_option("--directions", flags.directions, "support-function direction count");
    sub->add_option("--t-grid", flags.t_grid, "time grid size for mp");
    sub->add_option("--measure", flags.measure, "generalized control JSON file");
    sub->add_option("--samples", flags.samples, "trajectory sample count");
    sub->add_option("--seed", flags.seed, "seed for randomized checks");
  };
  struct Command
  {
    const char * name;
    const char * help;
    int (*run)(const Scenario &, const Flags &);
  };
  const Command commands[] = {
      {"reach", "reachable set under relaxed constraints", cmd_reach},
      {"mp", "attraction set of the exact constraints via generalized controls", cmd_mp},
      {"short-impulse", "attraction set of the short-impulse constraint family", cmd_short_impulse},
      {"traj", "trajectory samples (CSV) of a generalized control", cmd_traj},
      {"check", "run library invariants on the scenario", cmd_check},
  };
  std::vector<std::pair<CLI::App *, const Command *>> subs;
  for (const auto & c : commands) {
    auto * sub = app.add_subcommand(c.name, c.help);
    common(sub);
    subs.emplace_back(sub, &c);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }
  try {
    for (const auto & [sub, cmd] : subs) {
      if (sub->parsed()) return cmd->run(load_scenario_file(flags.scenario), flags);
    }
  } catch (const NumericError & e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
