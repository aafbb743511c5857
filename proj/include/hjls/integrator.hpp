#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>

#include "hjls/field.hpp"
#include "hjls/grid.hpp"
#include "hjls/term.hpp"

namespace hjls {

struct IntegratorOptions {
  double cfl_factor = 0.5;
  std::optional<double> max_step;
  /// Take one global step and return, possibly short of tspan[1].
  bool single_step = false;
  /// Print one line per step (index, t, dt, min/max of y) to stderr.
  bool collect_stats = false;

  void validate() const;
};

struct IntegrationResult {
  double t_final = 0.0;
  ScalarField y_final;
  std::size_t steps_taken = 0;
  double min_dt = 0.0;
  double max_dt = 0.0;
  /// Substages whose own step bound was below the frozen dt (CFL > 1 there).
  std::size_t stage_cfl_violations = 0;
};

/// Right-hand side of the method-of-lines system. The field is treated as a
/// flat vector; its shape is carried through unchanged.
using SchemeFunction = std::function<TermOutput(double t, const ScalarField& y)>;

SchemeFunction lax_friedrichs_scheme(const Grid& g, TermConfig cfg);

/// Forward Euler with dt = min(cfl * step_bound, max_step, t1 - t).
IntegrationResult ode_cfl_1(const SchemeFunction& term, std::array<double, 2> tspan,
                            const ScalarField& y0, const IntegratorOptions& opts);

/// Two Euler stages averaged with the start value (TVD-RK2).
IntegrationResult ode_cfl_2(const SchemeFunction& term, std::array<double, 2> tspan,
                            const ScalarField& y0, const IntegratorOptions& opts);

/// Three-stage TVD-RK3 built from Euler stages and convex averages.
IntegrationResult ode_cfl_3(const SchemeFunction& term, std::array<double, 2> tspan,
                            const ScalarField& y0, const IntegratorOptions& opts);

/// Dispatch on order 1, 2 or 3.
IntegrationResult ode_cfl(int order, const SchemeFunction& term, std::array<double, 2> tspan,
                          const ScalarField& y0, const IntegratorOptions& opts);

}  // namespace hjls
