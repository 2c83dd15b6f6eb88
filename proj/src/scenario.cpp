#include "ireach/scenario.hpp"

#include <fstream>
#include <sstream>

#include "ireach/random.hpp"

namespace ireach {

namespace {

int int_field(const json & j, const char * key, int fallback)
{
  if (!j.contains(key)) return fallback;
  const json & v = j.at(key);
  if (!v.is_number_integer()) throw ValidationError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

double number_field(const json & j, const char * key, double fallback)
{
  if (!j.contains(key)) return fallback;
  return static_cast<double>(rat_from_json(j.at(key)));
}

PiecewiseFn<Rat> kernel_from_json(const json & j, const std::optional<PiecewiseFn<Rat>> & c, const Rat & b,
                                  std::vector<PiecewiseFn<Rat>> & built)
{
  if (j.is_object()) return piecewise_from_json(j);
  if (!j.is_string()) throw ValidationError("constraint kernel must be a function or a builder reference");
  std::string ref = j.get<std::string>();
  auto at = ref.find('@');
  if (at == std::string::npos) throw ValidationError("builder reference '" + ref + "' lacks '@time'");
  std::string kind = ref.substr(0, at);
  Rat t = parse_rat(ref.substr(at + 1));
  if (!c) throw ValidationError("builder reference '" + ref + "' needs a thrust orientation c");
  try {
    auto di = build_double_integrator(*c, t, t, b);
    built = di.kernels;
  } catch (const DomainError & e) {
    throw ValidationError(e.what());
  }
  if (kind == "position") return built[0];
  if (kind == "velocity") return built[1];
  throw ValidationError("unknown builder '" + kind + "' (expected position or velocity)");
}

}  // namespace

json read_json_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error & e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Scenario load_scenario(const json & doc)
{
  try {
    if (!doc.is_object()) throw ValidationError("scenario must be a JSON object");
    Scenario sc;
    sc.name = doc.value("name", std::string("scenario"));
    const json & dom = doc.contains("domain") ? doc.at("domain") : json::object();
    Rat t0 = dom.contains("t0") ? rat_from_json(dom.at("t0")) : Rat(0);
    Rat theta0 = dom.contains("theta0") ? rat_from_json(dom.at("theta0")) : Rat(1);
    if (!doc.contains("b")) throw ValidationError("missing field 'b'");
    Rat b = rat_from_json(doc.at("b"));

    bool has_c = doc.contains("c");
    bool has_pi = doc.contains("pi");
    if (has_c == has_pi) throw ValidationError("exactly one of 'c' and 'pi' must be given");
    std::optional<PiecewiseFn<Rat>> c;
    if (has_c) {
      c = piecewise_from_json(doc.at("c"));
      if (t0 != 0 || theta0 != 1) throw ValidationError("a thrust orientation c requires the domain [0, 1]");
      try {
        sc.system = build_double_integrator(*c, Rat(1), Rat(1), b).system;
      } catch (const Error & e) {
        throw ValidationError(e.what());
      }
    } else {
      sc.system = ImpulseSystem<Rat>{t0, theta0, b, {}, std::nullopt};
      for (const auto & k : doc.at("pi")) sc.system.pi.push_back(piecewise_from_json(k));
    }
    sc.system.validate();

    sc.constraints = ConstraintSpec<Rat>::none();
    if (doc.contains("constraints")) {
      const json & cj = doc.at("constraints");
      std::vector<PiecewiseFn<Rat>> built;
      sc.constraints.s.clear();
      for (const auto & k : cj.value("s", json::array())) sc.constraints.s.push_back(kernel_from_json(k, c, b, built));
      const auto n = sc.constraints.s.size();
      sc.constraints.Y.clear();
      if (cj.contains("Y")) {
        for (const auto & box : cj.at("Y")) {
          Box bx;
          if (!box.is_array() || box.size() != n) throw ValidationError("each Y box needs one [lo, hi] per kernel");
          for (const auto & side : box) {
            if (!side.is_array() || side.size() != 2) throw ValidationError("box sides are [lo, hi] pairs");
            bx.lo.push_back(bound_from_json(side[0], true));
            bx.hi.push_back(bound_from_json(side[1], false));
          }
          sc.constraints.Y.push_back(std::move(bx));
        }
      } else {
        sc.constraints.Y.push_back(Box::whole(static_cast<int>(n)));
      }
      for (const auto & j : cj.value("J", json::array())) {
        if (!j.is_number_integer()) throw ValidationError("J entries are 1-based integers");
        sc.constraints.J.push_back(j.get<int>() - 1);
      }
    }
    sc.constraints.validate(t0, theta0);
    if (!sc.constraints.exact_kernels_are_step()) {
      throw ValidationError("constraint kernels indexed by J must be step functions");
    }

    if (doc.contains("task")) {
      const json & t = doc.at("task");
      sc.task.mesh = int_field(t, "mesh", sc.task.mesh);
      sc.task.epsilon = number_field(t, "epsilon", sc.task.epsilon);
      sc.task.directions = int_field(t, "directions", sc.task.directions);
      sc.task.t_grid = int_field(t, "t_grid", sc.task.t_grid);
      sc.task.samples = int_field(t, "samples", sc.task.samples);
      sc.task.sample_density = int_field(t, "sample_density", sc.task.sample_density);
      if (t.contains("seed")) sc.task.seed = t.at("seed").get<std::uint64_t>();
      std::string relax = t.value("relaxation", std::string("full"));
      if (relax == "full") {
        sc.task.relaxation = Relaxation::Full;
      } else if (relax == "partial") {
        sc.task.relaxation = Relaxation::Partial;
      } else {
        throw ValidationError("relaxation must be \"full\" or \"partial\"");
      }
      for (const auto & e : t.value("schedule", json::array())) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("schedule entries are [mesh, epsilon]");
        sc.task.schedule.emplace_back(e[0].get<int>(), static_cast<double>(rat_from_json(e[1])));
      }
    }
    return sc;
  } catch (const json::exception & e) {
    throw ValidationError(std::string("scenario schema violation: ") + e.what());
  } catch (const DomainError & e) {
    throw ValidationError(e.what());
  }
}

Scenario load_scenario_file(const std::string & path)
{
  return load_scenario(read_json_file(path));
}

std::vector<CheckResult> run_checks(const Scenario & sc, const std::optional<FAMeasure<Rat>> & measure,
                                    std::uint64_t seed)
{
  std::vector<CheckResult> out;
  auto record = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto & sys = sc.system;
  const auto & cons = sc.constraints;
  random::Rng rng(seed);
  random::Grid grid{sys.t0, sys.theta0, 24};
  Interval domain = Interval::closed(sys.t0, sys.theta0);

  std::vector<FAMeasure<Rat>> measures;
  if (measure) measures.push_back(*measure);
  for (int i = 0; i < 20; ++i) measures.push_back(random::measure<Rat>(rng, grid, true));

  std::vector<PiecewiseFn<Rat>> kernels = sys.pi;
  kernels.insert(kernels.end(), cons.s.begin(), cons.s.end());

  {
    bool ok = true;
    Partition mesh = Partition::uniform(domain, 16);
    Rat total(0);
    for (const auto & c : mesh.cells()) total += eta(c);
    ok = total == domain.length();
    for (const auto & k : kernels) {
      Partition kp = Partition::from_breakpoints(domain, k.breakpoints());
      Partition r = common_refinement(mesh, kp);
      ok = ok && is_finer(r, mesh) && is_finer(r, kp);
    }
    record("partitions: eta sums and common refinement is an upper bound", ok);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      for (std::size_t j = 0; j < kernels.size(); ++j) {
        const auto & f = kernels[i];
        const auto & g = kernels[j];
        ok = ok && sup_norm(f + g) <= sup_norm(f) + sup_norm(g);
        ok = ok && sup_norm(Rat(-3, 2) * f) == Rat(3, 2) * sup_norm(f);
        if (f.degree() + g.degree() <= kDefaultDegreeCap) ok = ok && sup_norm(f * g) <= sup_norm(f) * sup_norm(g);
      }
    }
    record("kernels: sup-norm axioms", ok);
  }
  {
    bool ok = true;
    for (const auto & mu : measures) {
      for (int rep = 0; rep < 10; ++rep) {
        Cell L = random::cell(rng, grid);
        Rat sum(0);
        for (const auto & piece : random::partition_of(rng, grid, L)) sum += eval_cell(mu, piece);
        ok = ok && sum == eval_cell(mu, L);
        ok = ok && eval_cell(mu, random::null_cell(rng, grid)) == 0;
      }
    }
    record("measures: finite additivity and null-set vanishing", ok);
  }
  {
    bool ok = true;
    for (const auto & mu : measures) {
      for (const auto & k : kernels) ok = ok && abs_value(integral(k, mu)) <= sup_norm(k) * variation(mu);
    }
    record("measures: integral bounded by sup-norm times variation", ok);
  }
  {
    bool ok = true;
    for (int rep = 0; rep < 50; ++rep) {
      auto f = random::control<Rat>(rng, grid, sys.b);
      auto direct = moments(f, sys, cons);
      auto lifted = gen_moments(indefinite(f), sys, cons);
      ok = ok && direct.pi == lifted.pi && direct.s == lifted.s;
    }
    record("dynamics: generalized moments of f*eta equal ordinary moments", ok);
  }
  {
    bool ok = true;
    for (const auto & mu : measures) {
      std::vector<Rat> breaks{sys.t0, sys.theta0};
      for (const auto & k : kernels) {
        if (k.is_step()) breaks.insert(breaks.end(), k.breakpoints().begin(), k.breakpoints().end());
      }
      for (const auto & a : mu.atoms()) {
        Rat width = (sys.theta0 - sys.t0) / 1000;
        breaks.push_back(a.loc);
        breaks.push_back(a.side == Side::Left ? Rat(a.loc - width) : Rat(a.loc + width));
      }
      std::sort(breaks.begin(), breaks.end());
      breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
      Partition K = Partition::from_breakpoints(domain, breaks);
      auto theta = averaging(mu, K);
      for (const auto & k : kernels) {
        if (!k.is_step()) continue;
        ok = ok && integrate_eta(multiply(k, theta)) == integral(k, mu);
      }
    }
    record("measures: averaging reproduces integrals of step kernels", ok);
  }
  {
    auto base = short_impulse_mp(sys);
    auto doubled_sys = sys;
    doubled_sys.b = sys.b * 2;
    auto doubled = short_impulse_mp(doubled_sys);
    bool ok = base.points.size() == doubled.points.size() && base.segments.size() == doubled.segments.size();
    for (std::size_t i = 0; ok && i < base.points.size(); ++i) ok = doubled.points[i] == Rat(2) * base.points[i];
    for (std::size_t i = 0; ok && i < base.segments.size(); ++i) {
      ok = doubled.segments[i].first == Rat(2) * base.segments[i].first &&
           doubled.segments[i].second == Rat(2) * base.segments[i].second;
    }
    record("attainability: short-impulse set scales linearly with b", ok);
  }
  if (sys.c) {
    bool ok = true;
    for (const auto & mu : measures) {
      Rat mass = eval_cell(mu, Cell(domain));
      if (mass == 0) continue;
      FAMeasure<Rat> scaled = lin_comb(sys.b / mass, mu, Rat(0), mu);
      auto x = trajectory_eval(scaled, sys.theta0, sys);
      auto m = gen_moments(scaled, sys, ConstraintSpec<Rat>::none());
      ok = ok && x(0) == m.pi(0) && x(1) == m.pi(1);
      auto start = trajectory_eval(scaled, sys.t0, sys);
      ok = ok && (start.array() == Rat(0)).all();
    }
    record("dynamics: terminal trajectory state matches generalized moments", ok);
  }
  record("constraints: exactly enforced kernels are step functions", cons.exact_kernels_are_step());
  return out;
}

}  // namespace ireach
