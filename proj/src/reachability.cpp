#include "hjls/reachability.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include "hjls/errors.hpp"
#include "hjls/shapes.hpp"

namespace hjls {

void RocketParams::validate() const {
  if (!(a > 0.0)) throw ValidationError("rockets: acceleration a must be positive");
  if (!(grav > 0.0)) throw ValidationError("rockets: gravity must be positive");
  if (!(capture_radius > 0.0)) throw ValidationError("rockets: capture radius must be positive");
  if (!(u_min < u_max)) throw ValidationError("rockets: u_min must be below u_max");
  if (!std::isfinite(a) || !std::isfinite(grav) || !std::isfinite(capture_radius) ||
      !std::isfinite(u_min) || !std::isfinite(u_max)) {
    throw ValidationError("rockets: parameters must be finite");
  }
}

double rockets_hamiltonian_at(std::array<double, 3> state, std::array<double, 3> p,
                              const RocketParams& q) {
  const double x = state[0];
  const double th = state[2];
  return -q.a * p[0] * std::cos(th) - p[1] * (q.grav - q.a - q.a * std::sin(th)) -
         q.u_max * std::abs(p[0] * x + p[2]) + q.u_min * std::abs(p[1] * x + p[2]);
}

ScalarField rockets_hamiltonian(double /*t*/, const Grid& g, const ScalarField& v,
                                std::span<const ScalarField> costates, const RocketParams& q) {
  if (g.dim() != 3) throw ValidationError("rockets_hamiltonian: grid must be 3-d");
  g.require_matches(v, "rockets_hamiltonian");
  if (costates.size() != 3) throw ValidationError("rockets_hamiltonian: need three costate fields");
  for (const auto& c : costates) g.require_matches(c, "rockets_hamiltonian costate");

  const auto& xs = g.axis_nodes(0);
  const auto& ths = g.axis_nodes(2);
  std::vector<double> cos_th(ths.size()), sin_th(ths.size());
  for (std::size_t k = 0; k < ths.size(); ++k) {
    cos_th[k] = std::cos(ths[k]);
    sin_th[k] = std::sin(ths[k]);
  }

  const std::size_t nz = g.counts()[1];
  const std::size_t nth = g.counts()[2];
  const auto p1 = costates[0].values();
  const auto p2 = costates[1].values();
  const auto p3 = costates[2].values();
  ScalarField out(g.shape());
  for (std::size_t n = 0; n < out.size(); ++n) {
    const std::size_t k = n % nth;
    const double x = xs[n / (nz * nth)];
    out[n] = -q.a * p1[n] * cos_th[k] - p2[n] * (q.grav - q.a - q.a * sin_th[k]) -
             q.u_max * std::abs(p1[n] * x + p3[n]) + q.u_min * std::abs(p2[n] * x + p3[n]);
  }
  return out;
}

namespace {

double game_payoff(std::array<double, 3> s, std::array<double, 3> p, const RocketParams& q, double u_p,
                   double u_e) {
  const double x = s[0];
  const double th = s[2];
  const double f0 = q.a * std::cos(th) + u_e * x;
  const double f1 = q.a * std::sin(th) + q.a + u_p * x - q.grav;
  const double f2 = u_p - u_e;
  return p[0] * f0 + p[1] * f1 + p[2] * f2;
}

}  // namespace

double rockets_hamiltonian_oracle(double /*t*/, std::array<double, 3> state, std::array<double, 3> p,
                                  const RocketParams& q) {
  double best = -INFINITY;
  for (double u_e : {q.u_min, q.u_max}) {
    double inner = INFINITY;
    for (double u_p : {q.u_min, q.u_max}) inner = std::min(inner, game_payoff(state, p, q, u_p, u_e));
    best = std::max(best, inner);
  }
  return -best;
}

double rockets_hamiltonian_dense(std::array<double, 3> state, std::array<double, 3> p,
                                 const RocketParams& q, std::size_t n) {
  if (n < 2) throw ValidationError("rockets_hamiltonian_dense: need at least 2 samples");
  auto control = [&](std::size_t i) {
    if (i + 1 == n) return q.u_max;
    return q.u_min + (q.u_max - q.u_min) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  double best = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    double inner = INFINITY;
    for (std::size_t j = 0; j < n; ++j) inner = std::min(inner, game_payoff(state, p, q, control(j), control(i)));
    best = std::max(best, inner);
  }
  return -best;
}

double rockets_partials(double /*t*/, const Grid& g, const ScalarField& /*v*/,
                        std::span<const CostateRange> /*ranges*/, std::size_t axis,
                        const RocketParams& q) {
  double max_abs_x = 0.0;
  for (double x : g.axis_nodes(0)) max_abs_x = std::max(max_abs_x, std::abs(x));
  switch (axis) {
    case 0: return q.a + std::abs(q.u_max) * max_abs_x;
    case 1:
      return std::max(std::abs(q.grav - 2.0 * q.a), std::abs(q.grav)) + std::abs(q.u_min) * max_abs_x;
    case 2: return std::abs(q.u_max) + std::abs(q.u_min);
    default:
      throw GridError(GridError::Kind::AxisOutOfRange, axis,
                      "rockets_partials: axis " + std::to_string(axis) + " out of range");
  }
}

TermConfig rockets_term_config(const RocketParams& params, DerivativeScheme scheme) {
  params.validate();
  TermConfig cfg;
  cfg.hamiltonian = [params](double t, const Grid& g, const ScalarField& v,
                             std::span<const ScalarField> p) {
    return rockets_hamiltonian(t, g, v, p, params);
  };
  cfg.partials = [params](double t, const Grid& g, const ScalarField& v,
                          std::span<const CostateRange> r, std::size_t axis) {
    return rockets_partials(t, g, v, r, axis, params);
  };
  cfg.derivative_scheme = scheme;
  cfg.dissipation = Dissipation::GlobalLaxFriedrichs;
  cfg.approximation_sign = ApproximationSign::Over;
  return cfg;
}

Grid rockets_grid(std::size_t resolution, double half_width) {
  return create_grid({-half_width, -half_width, -std::numbers::pi},
                     {half_width, half_width, std::numbers::pi},
                     {resolution, resolution, resolution}, {2});
}

ScalarField rockets_target(const Grid& g, const RocketParams& params) {
  const std::vector<double> center(g.dim(), 0.0);
  return cylinder(g, 2, center, params.capture_radius);
}

void ReachProblem::validate() const {
  if (grid.dim() != 3) throw ValidationError("reach problem: grid must be 3-d (x, z, theta)");
  if (!is_periodic(grid.boundary(2))) throw ValidationError("reach problem: theta axis must be periodic");
  grid.require_matches(target, "reach problem target");
  if (!target.all_finite()) throw ValidationError("reach problem: target has non-finite values");
  params.validate();
  if (!term_config.hamiltonian || !term_config.partials) {
    throw ValidationError("reach problem: term config lacks Hamiltonian or partials");
  }
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
    throw ValidationError("reach problem: horizon must be finite and nonnegative");
  }
  if (global_steps == 0) throw ValidationError("reach problem: need at least one global step");
  if (integrator_order < 1 || integrator_order > 3) {
    throw ValidationError("reach problem: integrator order must be 1, 2 or 3");
  }
  integrator.validate();
  const auto need = min_axis_nodes(term_config.derivative_scheme);
  for (std::size_t a = 0; a < grid.dim(); ++a) {
    if (grid.counts()[a] < need) {
      throw GridError(GridError::Kind::TooFewNodes, a,
                      "reach problem: axis " + std::to_string(a) + " has " +
                          std::to_string(grid.counts()[a]) + " nodes, scheme " +
                          std::string(scheme_name(term_config.derivative_scheme)) +
                          " needs at least " + std::to_string(need));
    }
  }
}

ReachProblem make_rockets_problem(std::size_t resolution, double horizon, std::size_t global_steps,
                                  const RocketParams& params, DerivativeScheme scheme) {
  Grid g = rockets_grid(resolution);
  ScalarField target = rockets_target(g, params);
  return ReachProblem{std::move(g), std::move(target), params, rockets_term_config(params, scheme),
                      horizon, global_steps, 3, IntegratorOptions{}};
}

BRTResult solve_brt(const ReachProblem& problem, const SnapshotCallback& on_snapshot) {
  problem.validate();

  BRTResult res;
  res.snapshots.push_back(problem.target);
  res.times.push_back(0.0);
  if (on_snapshot) on_snapshot(0, 0.0, res.snapshots.back());
  if (problem.horizon == 0.0) return res;

  const bool over = problem.term_config.approximation_sign == ApproximationSign::Over;
  const auto scheme = lax_friedrichs_scheme(problem.grid, problem.term_config);
  const double interval = problem.horizon / static_cast<double>(problem.global_steps);
  ScalarField v = problem.target;

  for (std::size_t k = 0; k < problem.global_steps; ++k) {
    const double t0 = res.times.back();
    const double t1 = k + 1 == problem.global_steps ? problem.horizon : static_cast<double>(k + 1) * interval;
    const auto start = std::chrono::steady_clock::now();
    IntegrationResult step;
    try {
      step = ode_cfl(problem.integrator_order, scheme, {t0, t1}, v, problem.integrator);
    } catch (const SolverError& e) {
      throw SolverError(k, "BRT interval " + std::to_string(k) + ": " + e.what());
    }
    v = std::move(step.y_final);

    // Freeze values once a state has entered the tube.
    const auto& prev = res.snapshots.back();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = over ? std::min(v[i], prev[i]) : std::max(v[i], prev[i]);

    res.interval_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    res.total_steps += step.steps_taken;
    res.snapshots.push_back(v);
    res.times.push_back(t1);
    if (on_snapshot) on_snapshot(k + 1, t1, res.snapshots.back());
  }
  return res;
}

double sublevel_volume(const Grid& g, const ScalarField& v, double level) {
  g.require_matches(v, "sublevel_volume");
  const auto vals = v.values();
  const auto inside = std::count_if(vals.begin(), vals.end(), [level](double x) { return x <= level; });
  return static_cast<double>(inside) * g.cell_volume();
}

}  // namespace hjls
