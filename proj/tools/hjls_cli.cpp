// hjls: Hamilton-Jacobi level-set solver.
//
//   hjls solve --config run.json --out results/ [--steps N] [--cfl F]
//              [--scheme first|eno2|eno3|weno5] [--resolution N]
//   hjls selftest
//
// Exit codes: 0 success, 1 solver failure, 2 usage or config error.

#include <iostream>

#include <CLI11.hpp>

#include "hjls/errors.hpp"
#include "hjls/experiment.hpp"
#include "hjls/selftest.hpp"
#include "hjls/spatial.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hamilton-Jacobi level-set solver"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Run the problem described by a JSON config");
  std::string config;
  std::string out_dir;
  std::size_t steps = 0;
  double cfl = 0.0;
  std::string scheme;
  std::size_t resolution = 0;
  solve->add_option("--config", config, "Config file")->required();
  solve->add_option("--out", out_dir, "Output directory")->required();
  auto* steps_opt = solve->add_option("--steps", steps, "Global steps (snapshot intervals)");
  auto* cfl_opt = solve->add_option("--cfl", cfl, "CFL safety factor in (0, 1]");
  auto* scheme_opt = solve->add_option("--scheme", scheme, "Spatial scheme")
                         ->check(CLI::IsMember({"first", "eno2", "eno3", "weno5"}));
  auto* res_opt = solve->add_option("--resolution", resolution, "Nodes per axis");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hjls::kExitOk : hjls::kExitUsage;
  }

  if (*solve) {
    hjls::Overrides ov;
    if (*steps_opt) ov.steps = steps;
    if (*cfl_opt) ov.cfl = cfl;
    if (*scheme_opt) ov.scheme = hjls::parse_scheme(scheme);
    if (*res_opt) ov.resolution = resolution;
    return hjls::run_experiment(config, out_dir, ov);
  }

  if (*selftest) {
    bool all = true;
    for (const auto& c : hjls::run_selftest()) {
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
      all = all && c.passed;
    }
    return all ? hjls::kExitOk : hjls::kExitSolverFailure;
  }
  return hjls::kExitUsage;
}
