#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ireach/json_io.hpp"

namespace ireach {

struct TaskParams
{
  int mesh = 64;
  double epsilon = 0.01;
  std::vector<std::pair<int, double>> schedule;
  int directions = 360;
  int t_grid = 1024;
  Relaxation relaxation = Relaxation::Full;
  int samples = 11;
  int sample_density = 1000;
  std::uint64_t seed = 1;
};

/// Problem data read from a scenario document: the system (from a thrust
/// orientation c or from explicit kernels pi), the constraints, and task parameters.
struct Scenario
{
  std::string name;
  ImpulseSystem<Rat> system;
  ConstraintSpec<Rat> constraints;
  TaskParams task;
};

/// Throws ValidationError on any schema or consistency violation.
Scenario load_scenario(const json & doc);
Scenario load_scenario_file(const std::string & path);

json read_json_file(const std::string & path);

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Library invariants exercised on the scenario's own kernels and on seeded
/// random measures and controls over its domain. When `measure` is given it joins
/// the measure-based checks.
std::vector<CheckResult> run_checks(const Scenario & sc, const std::optional<FAMeasure<Rat>> & measure,
                                    std::uint64_t seed);

}  // namespace ireach
