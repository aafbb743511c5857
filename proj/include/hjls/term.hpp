#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hjls/field.hpp"
#include "hjls/grid.hpp"
#include "hjls/spatial.hpp"

namespace hjls {

struct CostateRange {
  double lower = 0.0;
  double upper = 0.0;
};

/// H(t, x, p) at every node. `costates` holds one averaged costate field per
/// axis. Must be a pure function of its arguments.
using HamiltonianFn = std::function<ScalarField(double t, const Grid& g, const ScalarField& v,
                                                std::span<const ScalarField> costates)>;

/// Upper bound on |dH/dp_axis| over the grid, given the range each costate
/// takes. Must return a finite nonnegative value.
using PartialsFn = std::function<double(double t, const Grid& g, const ScalarField& v,
                                        std::span<const CostateRange> ranges, std::size_t axis)>;

enum class Dissipation { GlobalLaxFriedrichs };

/// Which way the zero level set is approximated. Interpreted by callers
/// (e.g. reachability masking); the term itself ignores it.
enum class ApproximationSign { Over, Under };

struct TermConfig {
  HamiltonianFn hamiltonian;
  PartialsFn partials;
  DerivativeScheme derivative_scheme = DerivativeScheme::Eno2;
  Dissipation dissipation = Dissipation::GlobalLaxFriedrichs;
  ApproximationSign approximation_sign = ApproximationSign::Over;
};

struct TermOutput {
  ScalarField delta;
  /// 1 / sum_i(alpha_i / dx_i); +inf when every alpha_i is zero.
  double step_bound = 0.0;
  /// Set when all alphas vanished while H did not, so the CFL bound carries
  /// no information.
  bool unbounded_step_warning = false;
};

struct DissipationResult {
  ScalarField dissipation;
  std::vector<double> alphas;
};

/// Global Lax-Friedrichs dissipation sum_i alpha_i (p_i^+ - p_i^-) / 2, with
/// alpha_i from `partials` over the grid-wide costate ranges.
DissipationResult dissipation_glf(std::span<const DerivativePair> derivs, const PartialsFn& partials,
                                  double t, const ScalarField& v, const Grid& g);

/// dv/dt = -(H(x, (p^- + p^+)/2) - dissipation).
TermOutput term_lax_friedrichs(double t, const ScalarField& v, const TermConfig& cfg, const Grid& g);

/// H = sum_i c_i p_i with alpha_i = |c_i|: constant-velocity transport.
TermConfig linear_advection_term(std::vector<double> velocity,
                                 DerivativeScheme scheme = DerivativeScheme::Weno5);

/// Per-axis costate range [min(p^-,p^+), max(p^-,p^+)] over all nodes.
CostateRange costate_range(const DerivativePair& pair);

}  // namespace hjls
