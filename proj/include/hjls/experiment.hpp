#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hjls/integrator.hpp"
#include "hjls/spatial.hpp"

namespace hjls {

/// Command-line values that take precedence over the config file.
struct Overrides {
  std::optional<std::size_t> steps;
  std::optional<double> cfl;
  std::optional<DerivativeScheme> scheme;
  std::optional<std::size_t> resolution;
};

enum ExitStatus : int { kExitOk = 0, kExitSolverFailure = 1, kExitUsage = 2 };

/// Parses JSON text, reporting syntax errors as ConfigError with line and
/// column.
nlohmann::json parse_config_text(const std::string& text, const std::string& origin);

/// Loads and validates a config, runs the problem and writes
/// value_NNNN.f64 snapshots, meta.json and timings.json into out_dir.
/// Returns an ExitStatus; messages go to stderr.
int run_experiment(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                   const Overrides& overrides = {});

}  // namespace hjls
