#include "hjls/term.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hjls/errors.hpp"

namespace hjls {

CostateRange costate_range(const DerivativePair& pair) {
  require_same_shape(pair.left, pair.right, "costate_range");
  CostateRange r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < pair.left.size(); ++i) {
    const double lo = std::min(pair.left[i], pair.right[i]);
    const double hi = std::max(pair.left[i], pair.right[i]);
    r.lower = std::min(r.lower, lo);
    r.upper = std::max(r.upper, hi);
  }
  return r;
}

DissipationResult dissipation_glf(std::span<const DerivativePair> derivs, const PartialsFn& partials,
                                  double t, const ScalarField& v, const Grid& g) {
  if (derivs.size() != g.dim()) {
    throw ValidationError("dissipation_glf: expected " + std::to_string(g.dim()) +
                          " derivative pairs, got " + std::to_string(derivs.size()));
  }
  if (!partials) throw ValidationError("dissipation_glf: no partials function");

  std::vector<CostateRange> ranges;
  ranges.reserve(derivs.size());
  for (const auto& d : derivs) {
    g.require_matches(d.left, "dissipation_glf");
    g.require_matches(d.right, "dissipation_glf");
    ranges.push_back(costate_range(d));
  }

  DissipationResult out{ScalarField(g.shape()), std::vector<double>(g.dim(), 0.0)};
  for (std::size_t axis = 0; axis < g.dim(); ++axis) {
    const double alpha = partials(t, g, v, ranges, axis);
    if (!std::isfinite(alpha) || alpha < 0.0) {
      throw ValidationError("dissipation_glf: partials returned " + std::to_string(alpha) +
                            " for axis " + std::to_string(axis));
    }
    out.alphas[axis] = alpha;
    const auto& d = derivs[axis];
    for (std::size_t i = 0; i < out.dissipation.size(); ++i) {
      out.dissipation[i] += 0.5 * alpha * (d.right[i] - d.left[i]);
    }
  }
  return out;
}

TermOutput term_lax_friedrichs(double t, const ScalarField& v, const TermConfig& cfg, const Grid& g) {
  g.require_matches(v, "term_lax_friedrichs");
  if (!cfg.hamiltonian) throw ValidationError("term_lax_friedrichs: no Hamiltonian");

  std::vector<DerivativePair> derivs;
  std::vector<ScalarField> averaged;
  derivs.reserve(g.dim());
  averaged.reserve(g.dim());
  for (std::size_t axis = 0; axis < g.dim(); ++axis) {
    derivs.push_back(upwind_derivative(cfg.derivative_scheme, g, v, axis));
    ScalarField avg(g.shape());
    const auto& d = derivs.back();
    for (std::size_t i = 0; i < avg.size(); ++i) avg[i] = 0.5 * (d.left[i] + d.right[i]);
    averaged.push_back(std::move(avg));
  }

  ScalarField ham = cfg.hamiltonian(t, g, v, averaged);
  g.require_matches(ham, "term_lax_friedrichs: Hamiltonian output");
  if (!ham.all_finite()) throw Error("term_lax_friedrichs: Hamiltonian returned non-finite values");

  auto diss = dissipation_glf(derivs, cfg.partials, t, v, g);

  TermOutput out;
  out.delta = ScalarField(g.shape());
  for (std::size_t i = 0; i < ham.size(); ++i) out.delta[i] = -(ham[i] - diss.dissipation[i]);

  double inv = 0.0;
  for (std::size_t axis = 0; axis < g.dim(); ++axis) inv += diss.alphas[axis] / g.spacings()[axis];
  if (inv > 0.0) {
    out.step_bound = 1.0 / inv;
  } else {
    out.step_bound = std::numeric_limits<double>::infinity();
    out.unbounded_step_warning =
        std::any_of(ham.values().begin(), ham.values().end(), [](double h) { return h != 0.0; });
  }
  return out;
}

TermConfig linear_advection_term(std::vector<double> velocity, DerivativeScheme scheme) {
  for (double c : velocity) {
    if (!std::isfinite(c)) throw ValidationError("linear_advection_term: velocity must be finite");
  }
  TermConfig cfg;
  cfg.hamiltonian = [velocity](double, const Grid& g, const ScalarField&, std::span<const ScalarField> p) {
    if (p.size() != velocity.size()) {
      throw ValidationError("linear_advection_term: velocity has " + std::to_string(velocity.size()) +
                            " components for a " + std::to_string(p.size()) + "-d grid");
    }
    ScalarField h(g.shape());
    for (std::size_t axis = 0; axis < p.size(); ++axis) {
      for (std::size_t i = 0; i < h.size(); ++i) h[i] += velocity[axis] * p[axis][i];
    }
    return h;
  };
  cfg.partials = [velocity](double, const Grid&, const ScalarField&, std::span<const CostateRange>,
                            std::size_t axis) { return std::abs(velocity.at(axis)); };
  cfg.derivative_scheme = scheme;
  return cfg;
}

}  // namespace hjls
