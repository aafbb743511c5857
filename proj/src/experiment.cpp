#include "hjls/experiment.hpp"

#include <chrono>
#include <optional>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hjls/errors.hpp"
#include "hjls/grid.hpp"
#include "hjls/reachability.hpp"
#include "hjls/shapes.hpp"
#include "hjls/snapshot_io.hpp"
#include "hjls/term.hpp"

namespace hjls {

using nlohmann::json;

nlohmann::json parse_config_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line/column and quote the line.
    const std::size_t pos = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    const std::size_t line_end = text.find('\n', line_start);
    const std::string snippet = text.substr(line_start, line_end == std::string::npos ? std::string::npos
                                                                                      : line_end - line_start);
    std::ostringstream os;
    os << origin << ":" << line << ":" << (pos - line_start + 1) << ": JSON syntax error: " << e.what()
       << "\n  " << snippet;
    throw ConfigError(os.str());
  }
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw ConfigError(where + ": unknown key \"" + it.key() + "\"");
  }
}

template <class T>
T get(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing key \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

template <class T>
T get_or(const json& obj, const std::string& key, T fallback, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  return get<T>(obj, key, where);
}

struct RunSpec {
  RunSpec(std::string name, Grid g) : problem(std::move(name)), grid(std::move(g)) {}

  std::string problem;
  Grid grid;
  ScalarField initial;
  TermConfig term;
  double horizon = 0.0;
  std::size_t global_steps = 1;
  int order = 3;
  IntegratorOptions integrator;
  std::optional<RocketParams> rockets;
  json params = json::object();
};

IntegratorOptions read_integrator(const json& cfg, int& order, const Overrides& ov) {
  IntegratorOptions opts;
  const json section = cfg.value("integrator", json::object());
  if (!section.is_object()) throw ConfigError("integrator: expected an object");
  reject_unknown_keys(section, {"order", "cfl", "max_step", "stats"}, "integrator");
  order = get_or<int>(section, "order", 3, "integrator");
  opts.cfl_factor = ov.cfl.value_or(get_or<double>(section, "cfl", 0.5, "integrator"));
  if (section.contains("max_step") && !section.at("max_step").is_null()) {
    opts.max_step = get<double>(section, "max_step", "integrator");
  }
  opts.collect_stats = get_or<bool>(section, "stats", false, "integrator");
  if (order < 1 || order > 3) throw ConfigError("integrator.order: must be 1, 2 or 3");
  try {
    opts.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  return opts;
}

ScalarField read_shape(const json& s, const Grid& g) {
  if (!s.is_object()) throw ConfigError("initial: expected an object");
  const auto kind = get<std::string>(s, "shape", "initial");
  if (kind == "sphere") {
    reject_unknown_keys(s, {"shape", "center", "radius"}, "initial");
    return sphere(g, get<std::vector<double>>(s, "center", "initial"), get<double>(s, "radius", "initial"));
  }
  if (kind == "cylinder") {
    reject_unknown_keys(s, {"shape", "axis", "center", "radius"}, "initial");
    return cylinder(g, get<std::size_t>(s, "axis", "initial"), get<std::vector<double>>(s, "center", "initial"),
                    get<double>(s, "radius", "initial"));
  }
  if (kind == "ellipsoid") {
    reject_unknown_keys(s, {"shape", "weights", "radius"}, "initial");
    return ellipsoid(g, get<std::vector<double>>(s, "weights", "initial"), get<double>(s, "radius", "initial"));
  }
  if (kind == "rectangle") {
    reject_unknown_keys(s, {"shape", "lower", "upper"}, "initial");
    return hyper_rectangle(g, get<std::vector<double>>(s, "lower", "initial"),
                           get<std::vector<double>>(s, "upper", "initial"));
  }
  throw ConfigError("initial.shape: unknown shape \"" + kind + "\" (sphere, cylinder, ellipsoid, rectangle)");
}

DerivativeScheme read_scheme(const json& cfg, DerivativeScheme fallback, const Overrides& ov) {
  if (ov.scheme) return *ov.scheme;
  if (!cfg.contains("scheme")) return fallback;
  try {
    return parse_scheme(get<std::string>(cfg, "scheme", "config"));
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("scheme: ") + e.what());
  }
}

void check_scheme_fits(const Grid& g, DerivativeScheme s) {
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (g.counts()[a] < min_axis_nodes(s)) {
      throw ConfigError("axis " + std::to_string(a) + " has " + std::to_string(g.counts()[a]) +
                        " nodes; scheme " + std::string(scheme_name(s)) + " (ghost width " +
                        std::to_string(ghost_width(s)) + ") needs at least " +
                        std::to_string(min_axis_nodes(s)));
    }
  }
}

RunSpec build_rockets(const json& cfg, const Overrides& ov) {
  reject_unknown_keys(cfg, {"problem", "resolution", "half_width", "horizon", "global_steps", "scheme",
                            "integrator", "rockets"},
                      "config");
  RocketParams params;
  const json rp = cfg.value("rockets", json::object());
  reject_unknown_keys(rp, {"a", "g", "capture_radius", "u_min", "u_max"}, "rockets");
  params.a = get_or<double>(rp, "a", params.a, "rockets");
  params.grav = get_or<double>(rp, "g", params.grav, "rockets");
  params.capture_radius = get_or<double>(rp, "capture_radius", params.capture_radius, "rockets");
  params.u_min = get_or<double>(rp, "u_min", params.u_min, "rockets");
  params.u_max = get_or<double>(rp, "u_max", params.u_max, "rockets");

  const auto resolution = ov.resolution.value_or(get_or<std::size_t>(cfg, "resolution", 50, "config"));
  const auto half_width = get_or<double>(cfg, "half_width", 64.0, "config");
  const auto scheme = read_scheme(cfg, DerivativeScheme::Eno2, ov);

  RunSpec run("rockets", rockets_grid(resolution, half_width));
  check_scheme_fits(run.grid, scheme);
  run.initial = rockets_target(run.grid, params);
  run.term = rockets_term_config(params, scheme);
  run.horizon = get_or<double>(cfg, "horizon", 2.5, "config");
  run.global_steps = ov.steps.value_or(get_or<std::size_t>(cfg, "global_steps", 10, "config"));
  run.integrator = read_integrator(cfg, run.order, ov);
  run.rockets = params;
  run.params = {{"a", params.a}, {"g", params.grav}, {"capture_radius", params.capture_radius},
                 {"u_min", params.u_min}, {"u_max", params.u_max}};
  return run;
}

RunSpec build_advection(const json& cfg, const Overrides& ov) {
  reject_unknown_keys(cfg, {"problem", "grid", "velocity", "initial", "horizon", "global_steps", "scheme",
                            "integrator"},
                      "config");
  const json gj = get<json>(cfg, "grid", "config");
  reject_unknown_keys(gj, {"mins", "maxs", "counts", "periodic"}, "grid");
  auto counts = get<std::vector<std::size_t>>(gj, "counts", "grid");
  if (ov.resolution) counts.assign(counts.size(), *ov.resolution);
  const auto periodic = get_or<std::vector<std::size_t>>(gj, "periodic", {}, "grid");
  const auto scheme = read_scheme(cfg, DerivativeScheme::Weno5, ov);

  RunSpec run("advection",
               create_grid(get<std::vector<double>>(gj, "mins", "grid"), get<std::vector<double>>(gj, "maxs", "grid"),
                           counts, std::set<std::size_t>(periodic.begin(), periodic.end())));
  check_scheme_fits(run.grid, scheme);
  const auto velocity = get<std::vector<double>>(cfg, "velocity", "config");
  if (velocity.size() != run.grid.dim()) {
    throw ConfigError("velocity: expected " + std::to_string(run.grid.dim()) + " components");
  }
  run.initial = read_shape(get<json>(cfg, "initial", "config"), run.grid);
  run.term = linear_advection_term(velocity, scheme);
  run.horizon = get<double>(cfg, "horizon", "config");
  run.global_steps = ov.steps.value_or(get_or<std::size_t>(cfg, "global_steps", 1, "config"));
  run.integrator = read_integrator(cfg, run.order, ov);
  run.params = {{"velocity", velocity}};
  return run;
}

RunSpec build_spec(const json& cfg, const Overrides& ov) {
  if (!cfg.is_object()) throw ConfigError("config: top level must be an object");
  const auto problem = get<std::string>(cfg, "problem", "config");
  RunSpec run = [&] {
    try {
      if (problem == "rockets") return build_rockets(cfg, ov);
      if (problem == "advection") return build_advection(cfg, ov);
    } catch (const ConfigError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ConfigError(problem + ": " + e.what());
    }
    throw ConfigError("problem: unknown problem \"" + problem + "\" (rockets, advection)");
  }();
  if (!(run.horizon >= 0.0) || !std::isfinite(run.horizon)) {
    throw ConfigError("horizon: must be finite and nonnegative");
  }
  if (run.global_steps == 0) throw ConfigError("global_steps: must be at least 1");
  return run;
}

std::string snapshot_name(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "value_%04zu.f64", k);
  return buf;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

int run_experiment(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                   const Overrides& overrides) {
  std::optional<RunSpec> loaded;
  try {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file " << config_path.string() << '\n';
      return kExitUsage;
    }
    std::stringstream text;
    text << in.rdbuf();
    loaded = build_spec(parse_config_text(text.str(), config_path.string()), overrides);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  const RunSpec& run = *loaded;

  try {
    std::filesystem::create_directories(out_dir);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: cannot create output directory " << out_dir.string() << ": " << e.what() << '\n';
    return kExitSolverFailure;
  }

  std::vector<std::string> files;
  std::vector<double> times;
  auto write_snapshot = [&](std::size_t k, double t, const ScalarField& f) {
    files.push_back(snapshot_name(k));
    times.push_back(t);
    export_field(f, run.grid, out_dir / files.back());
  };

  const auto start = std::chrono::steady_clock::now();
  std::vector<double> interval_seconds;
  std::size_t total_steps = 0;
  try {
    if (run.rockets) {
      const ReachProblem problem{run.grid, run.initial, *run.rockets, run.term, run.horizon,
                                 run.global_steps, run.order, run.integrator};
      const auto brt = solve_brt(problem, write_snapshot);
      interval_seconds = brt.interval_seconds;
      total_steps = brt.total_steps;
    } else {
      const auto scheme = lax_friedrichs_scheme(run.grid, run.term);
      ScalarField v = run.initial;
      write_snapshot(0, 0.0, v);
      const double interval = run.horizon / static_cast<double>(run.global_steps);
      double t = 0.0;
      for (std::size_t k = 0; run.horizon > 0.0 && k < run.global_steps; ++k) {
        const double t1 = k + 1 == run.global_steps ? run.horizon : static_cast<double>(k + 1) * interval;
        const auto s0 = std::chrono::steady_clock::now();
        IntegrationResult r;
        try {
          r = ode_cfl(run.order, scheme, {t, t1}, v, run.integrator);
        } catch (const SolverError& e) {
          throw SolverError(k, "interval " + std::to_string(k) + ": " + e.what());
        }
        v = std::move(r.y_final);
        t = t1;
        total_steps += r.steps_taken;
        interval_seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count());
        write_snapshot(k + 1, t, v);
      }
    }
  } catch (const SolverError& e) {
    std::cerr << "solver error (step " << e.step() << "): " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
  const double global_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json boundaries = json::array();
  for (std::size_t a = 0; a < run.grid.dim(); ++a) boundaries.push_back(boundary_name(run.grid.boundary(a)));
  const json meta = {
      {"problem", run.problem},
      {"grid",
       {{"mins", run.grid.mins()},
        {"maxs", run.grid.maxs()},
        {"counts", run.grid.counts()},
        {"spacings", run.grid.spacings()},
        {"boundary", boundaries}}},
      {"scheme", scheme_name(run.term.derivative_scheme)},
      {"dissipation", "global_lax_friedrichs"},
      {"integrator", {{"order", run.order}, {"cfl", run.integrator.cfl_factor}}},
      {"horizon", run.horizon},
      {"global_steps", run.global_steps},
      {"tube_masking", run.rockets.has_value()},
      {"parameters", run.params},
      {"times", times},
      {"files", files},
      {"format",
       {{"magic", "HJLS"}, {"version", kSnapshotVersion}, {"endianness", "little"}, {"layout", "row-major"}}},
  };

  double mean_interval = 0.0;
  for (double s : interval_seconds) mean_interval += s;
  if (!interval_seconds.empty()) mean_interval /= static_cast<double>(interval_seconds.size());
  const json timings = {
      {"global_seconds", global_seconds},
      {"mean_interval_seconds", mean_interval},
      {"interval_seconds", interval_seconds},
      {"total_steps", total_steps},
      {"mean_step_seconds", total_steps ? global_seconds / static_cast<double>(total_steps) : 0.0},
  };

  try {
    write_json(out_dir / "meta.json", meta);
    write_json(out_dir / "timings.json", timings);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
  return kExitOk;
}

}  // namespace hjls
