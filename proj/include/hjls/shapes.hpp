#pragma once

#include <cstddef>
#include <span>

#include "hjls/field.hpp"
#include "hjls/grid.hpp"

namespace hjls {

// Implicit surfaces. Interior is negative, the surface is the zero level set.

/// Exact signed distance to a sphere (circle in 2-d, interval in 1-d).
ScalarField sphere(const Grid& g, std::span<const double> center, double radius);

/// Signed distance to an infinite cylinder whose axis runs along
/// `ignored_axis`; `center` has g.dim() entries and its ignored entry is unused.
ScalarField cylinder(const Grid& g, std::size_t ignored_axis, std::span<const double> center,
                     double radius);

/// sum_i w_i x_i^2 - radius, centered at the origin. Not a signed distance:
/// the magnitude away from the surface is smeared by the weights.
ScalarField ellipsoid(const Grid& g, std::span<const double> semiaxis_weights, double radius);

/// Exact signed distance to the boundary of an axis-aligned box.
ScalarField hyper_rectangle(const Grid& g, std::span<const double> lower,
                            std::span<const double> upper);

ScalarField csg_union(const ScalarField& a, const ScalarField& b);
ScalarField csg_intersect(const ScalarField& a, const ScalarField& b);
ScalarField csg_complement(const ScalarField& a);
ScalarField csg_difference(const ScalarField& a, const ScalarField& b);

}  // namespace hjls
