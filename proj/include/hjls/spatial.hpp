#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hjls/field.hpp"
#include "hjls/grid.hpp"

namespace hjls {

// Upwind one-sided approximations of dv/dx_axis.
//
// `left` leans on the backward stencil (the value to use when information
// travels in +x), `right` on the forward stencil. Note the naming of D-/D+
// here follows the usual convention: left is built from backward differences.

enum class DerivativeScheme { First, Eno2, Eno3, Weno5 };

std::string_view scheme_name(DerivativeScheme s) noexcept;
/// Accepts "first", "eno2", "eno3", "weno5". Throws ValidationError otherwise.
DerivativeScheme parse_scheme(std::string_view name);

/// Ghost cells needed on each side of a line.
std::size_t ghost_width(DerivativeScheme s) noexcept;

/// Minimum nodes along a differentiated axis: 2*width + 3. Below that the
/// widest stencil plus its divided-difference neighbours covers the line
/// (periodic axes would read the same node from both wraps).
std::size_t min_axis_nodes(DerivativeScheme s) noexcept;

struct DerivativePair {
  ScalarField left;
  ScalarField right;
  std::size_t axis = 0;
};

/// Divided differences of one ghost-extended line. Entry j of d1 holds
/// D1 at j+1/2, d2[j] holds D2 at j, d3[j] holds D3 at j+1/2 (extended
/// indices). Entries whose stencil leaves the line are zero.
struct DividedDifferenceTable {
  std::vector<double> d0;
  std::vector<double> d1;
  std::vector<double> d2;
  std::vector<double> d3;
};

DividedDifferenceTable divided_differences(std::span<const double> line, double dx);

/// How the WENO regulariser is formed from the five local one-sided
/// differences: 1e-6 * max(d_k^2) + 1e-99 (default) or 1e-6 * max(d_k) + 1e-99.
enum class WenoEpsilon { MaxSquared, MaxValue };

struct WenoWorkspace {
  std::array<double, 3> sigma{};
  std::array<double, 3> alpha{};
  double eps = 0.0;
  std::array<double, 3> w{};
};

/// Smoothness indicators and normalized weights for the five one-sided
/// differences d[0..4], ordered from the upwind end of the stencil.
WenoWorkspace weno_weights(std::span<const double, 5> d, WenoEpsilon mode = WenoEpsilon::MaxSquared);

/// The three third-order substencil estimates built from the same d[0..4].
std::array<double, 3> weno_substencils(std::span<const double, 5> d) noexcept;

DerivativePair upwind_first_first(const Grid& g, const ScalarField& f, std::size_t axis);
DerivativePair upwind_first_eno2(const Grid& g, const ScalarField& f, std::size_t axis);
DerivativePair upwind_first_eno3(const Grid& g, const ScalarField& f, std::size_t axis);
DerivativePair upwind_first_weno5(const Grid& g, const ScalarField& f, std::size_t axis,
                                  WenoEpsilon mode = WenoEpsilon::MaxSquared);

DerivativePair upwind_derivative(DerivativeScheme s, const Grid& g, const ScalarField& f,
                                 std::size_t axis);

}  // namespace hjls
