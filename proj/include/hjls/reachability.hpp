#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hjls/field.hpp"
#include "hjls/grid.hpp"
#include "hjls/integrator.hpp"
#include "hjls/term.hpp"

namespace hjls {

/// Two identical rockets in relative coordinates (x, z, theta).
/// Units are feet and seconds.
struct RocketParams {
  double a = 1.0;
  double grav = 32.0;
  double capture_radius = 1.5;
  double u_min = -1.0;
  double u_max = 1.0;

  void validate() const;
};

/// Closed-form game Hamiltonian, node by node:
///   -a p1 cos(th) - p2 (g - a - a sin(th)) - u_max |p1 x + p3| + u_min |p2 x + p3|
/// with x and th taken from axes 0 and 2 of `g`.
ScalarField rockets_hamiltonian(double t, const Grid& g, const ScalarField& v,
                                std::span<const ScalarField> costates, const RocketParams& params);

/// Same closed form at a single point. state = (x, z, theta).
double rockets_hamiltonian_at(std::array<double, 3> state, std::array<double, 3> p,
                              const RocketParams& params);

/// -max_{u_e} min_{u_p} p . f(state, u_p, u_e) with
/// f = (a cos th + u_e x, a sin th + a + u_p x - g, u_p - u_e), by
/// enumerating the control extremes. Exact because p . f is affine in each
/// control.
double rockets_hamiltonian_oracle(double t, std::array<double, 3> state, std::array<double, 3> p,
                                  const RocketParams& params);

/// Same min-max evaluated on a dense (n x n) grid of controls.
double rockets_hamiltonian_dense(std::array<double, 3> state, std::array<double, 3> p,
                                 const RocketParams& params, std::size_t n);

/// Bound on |dH/dp_axis| for the closed-form Hamiltonian:
///   axis 0: a + |u_max| max|x|
///   axis 1: max(|g - 2a|, |g|) + |u_min| max|x|
///   axis 2: |u_max| + |u_min|
/// Trig maxima are taken over the whole circle; max|x| over the grid nodes.
double rockets_partials(double t, const Grid& g, const ScalarField& v,
                        std::span<const CostateRange> ranges, std::size_t axis,
                        const RocketParams& params);

/// Term wiring for the game: closed-form Hamiltonian, analytic partials, GLF,
/// over-approximation.
TermConfig rockets_term_config(const RocketParams& params,
                               DerivativeScheme scheme = DerivativeScheme::Eno2);

/// [-64, 64]^2 x [-pi, pi) with theta periodic, `resolution` nodes per axis.
Grid rockets_grid(std::size_t resolution, double half_width = 64.0);

/// Capture set: cylinder of the capture radius about the theta axis.
ScalarField rockets_target(const Grid& g, const RocketParams& params);

struct ReachProblem {
  Grid grid;
  ScalarField target;
  RocketParams params;
  TermConfig term_config;
  double horizon = 0.0;
  std::size_t global_steps = 1;
  int integrator_order = 3;
  IntegratorOptions integrator;

  void validate() const;
};

ReachProblem make_rockets_problem(std::size_t resolution, double horizon, std::size_t global_steps,
                                  const RocketParams& params = {},
                                  DerivativeScheme scheme = DerivativeScheme::Eno2);

struct BRTResult {
  std::vector<ScalarField> snapshots;
  std::vector<double> times;
  /// Wall-clock seconds spent in each interval.
  std::vector<double> interval_seconds;
  std::size_t total_steps = 0;
};

/// Called after every recorded snapshot (index 0 is the target).
using SnapshotCallback = std::function<void(std::size_t index, double time, const ScalarField&)>;

/// Backward reachable tube. Splits the horizon into `global_steps` equal
/// intervals; after integrating each one the value is masked with
/// min(v, previous snapshot) so the tube never shrinks.
BRTResult solve_brt(const ReachProblem& problem, const SnapshotCallback& on_snapshot = {});

/// Volume of {v <= level}: node count times cell volume.
double sublevel_volume(const Grid& g, const ScalarField& v, double level = 0.0);

}  // namespace hjls
