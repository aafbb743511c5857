#include "hjls/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "hjls/errors.hpp"

namespace hjls {

void IntegratorOptions::validate() const {
  if (!(cfl_factor > 0.0 && cfl_factor <= 1.0)) {
    throw ValidationError("integrator: cfl_factor must lie in (0, 1], got " + std::to_string(cfl_factor));
  }
  if (max_step && !(*max_step > 0.0)) throw ValidationError("integrator: max_step must be positive");
}

SchemeFunction lax_friedrichs_scheme(const Grid& g, TermConfig cfg) {
  return [g, cfg = std::move(cfg)](double t, const ScalarField& y) {
    return term_lax_friedrichs(t, y, cfg, g);
  };
}

namespace {

// Evaluates the term with error context and performs Euler updates.
class StageRunner {
 public:
  explicit StageRunner(const SchemeFunction& term) : term_(term) {}

  TermOutput evaluate(double t, const ScalarField& y, std::size_t step) {
    TermOutput out;
    try {
      out = term_(t, y);
    } catch (const SolverError&) {
      throw;
    } catch (const Error& e) {
      throw SolverError(step, "integrator: step " + std::to_string(step) + ": " + e.what());
    }
    if (out.delta.shape() != y.shape()) {
      throw SolverError(step, "integrator: term returned a field of the wrong shape at step " +
                                  std::to_string(step));
    }
    if (!out.delta.all_finite()) {
      throw SolverError(step, "integrator: non-finite derivative at step " + std::to_string(step));
    }
    if (out.unbounded_step_warning && !warned_) {
      std::fprintf(stderr, "warning: all dissipation coefficients are zero; CFL bound undefined\n");
      warned_ = true;
    }
    return out;
  }

  void euler(const ScalarField& y, const TermOutput& rhs, double dt, ScalarField& out) const {
    out = y;
    auto dst = out.values();
    auto src = rhs.delta.values();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += dt * src[i];
  }

 private:
  const SchemeFunction& term_;
  bool warned_ = false;
};

// Chooses dt for one global step, clipping at the end of the span.
double choose_dt(double step_bound, double t, double t1, const IntegratorOptions& opts, bool& last) {
  double dt = opts.cfl_factor * step_bound;
  if (opts.max_step) dt = std::min(dt, *opts.max_step);
  const double remaining = t1 - t;
  last = !(dt < remaining);
  return last ? remaining : dt;
}

template <class Step>
IntegrationResult integrate(const SchemeFunction& term, std::array<double, 2> tspan, const ScalarField& y0,
                            const IntegratorOptions& opts, Step&& step) {
  opts.validate();
  const double t0 = tspan[0];
  const double t1 = tspan[1];
  if (!std::isfinite(t0) || !std::isfinite(t1) || t1 < t0) {
    throw ValidationError("integrator: tspan must be finite with t0 <= t1");
  }
  if (!y0.all_finite()) throw ValidationError("integrator: initial field has non-finite values");

  IntegrationResult res;
  res.y_final = y0;
  res.t_final = t0;
  res.min_dt = std::numeric_limits<double>::infinity();
  res.max_dt = 0.0;

  StageRunner runner(term);
  double t = t0;
  std::size_t k = 0;
  while (t < t1) {
    TermOutput first = runner.evaluate(t, res.y_final, k);
    bool last = false;
    const double dt = choose_dt(first.step_bound, t, t1, opts, last);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
      throw SolverError(k, "integrator: invalid step size at step " + std::to_string(k));
    }
    res.stage_cfl_violations += step(runner, t, dt, first, res.y_final, k);
    t = last ? t1 : t + dt;
    ++k;
    res.min_dt = std::min(res.min_dt, dt);
    res.max_dt = std::max(res.max_dt, dt);
    if (opts.collect_stats) {
      std::fprintf(stderr, "step %zu t=%.9g dt=%.6g min=%.9g max=%.9g\n", k, t, dt,
                   res.y_final.min_value(), res.y_final.max_value());
    }
    if (opts.single_step) break;
  }
  res.t_final = t;
  res.steps_taken = k;
  if (k == 0) res.min_dt = 0.0;
  return res;
}

std::size_t violates(const TermOutput& stage, double dt) { return dt > stage.step_bound ? 1 : 0; }

}  // namespace

IntegrationResult ode_cfl_1(const SchemeFunction& term, std::array<double, 2> tspan,
                            const ScalarField& y0, const IntegratorOptions& opts) {
  ScalarField next;
  return integrate(term, tspan, y0, opts,
                   [&](StageRunner& r, double, double dt, const TermOutput& rhs, ScalarField& y,
                       std::size_t) -> std::size_t {
                     r.euler(y, rhs, dt, next);
                     std::swap(y, next);
                     return 0;
                   });
}

IntegrationResult ode_cfl_2(const SchemeFunction& term, std::array<double, 2> tspan,
                            const ScalarField& y0, const IntegratorOptions& opts) {
  ScalarField y1, y2;
  return integrate(term, tspan, y0, opts,
                   [&](StageRunner& r, double t, double dt, const TermOutput& rhs, ScalarField& y,
                       std::size_t k) -> std::size_t {
                     r.euler(y, rhs, dt, y1);
                     const TermOutput rhs1 = r.evaluate(t + dt, y1, k);
                     r.euler(y1, rhs1, dt, y2);
                     auto out = y.values();
                     auto b = y2.values();
                     for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (out[i] + b[i]);
                     return violates(rhs1, dt);
                   });
}

IntegrationResult ode_cfl_3(const SchemeFunction& term, std::array<double, 2> tspan,
                            const ScalarField& y0, const IntegratorOptions& opts) {
  ScalarField y1, y2, y_half, y_3half;
  return integrate(term, tspan, y0, opts,
                   [&](StageRunner& r, double t, double dt, const TermOutput& rhs, ScalarField& y,
                       std::size_t k) -> std::size_t {
                     r.euler(y, rhs, dt, y1);
                     const TermOutput rhs1 = r.evaluate(t + dt, y1, k);
                     r.euler(y1, rhs1, dt, y2);
                     y_half = y;
                     {
                       auto h = y_half.values();
                       auto b = y2.values();
                       for (std::size_t i = 0; i < h.size(); ++i) h[i] = 0.25 * (3.0 * h[i] + b[i]);
                     }
                     const TermOutput rhs2 = r.evaluate(t + 0.5 * dt, y_half, k);
                     r.euler(y_half, rhs2, dt, y_3half);
                     auto out = y.values();
                     auto c = y_3half.values();
                     for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + 2.0 * c[i]) / 3.0;
                     return violates(rhs1, dt) + violates(rhs2, dt);
                   });
}

IntegrationResult ode_cfl(int order, const SchemeFunction& term, std::array<double, 2> tspan,
                          const ScalarField& y0, const IntegratorOptions& opts) {
  switch (order) {
    case 1: return ode_cfl_1(term, tspan, y0, opts);
    case 2: return ode_cfl_2(term, tspan, y0, opts);
    case 3: return ode_cfl_3(term, tspan, y0, opts);
    default: throw ValidationError("integrator: order must be 1, 2 or 3, got " + std::to_string(order));
  }
}

}  // namespace hjls
