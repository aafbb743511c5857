#include "hjls/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hjls/errors.hpp"

namespace hjls {

namespace {

void require_length(std::span<const double> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                          std::to_string(v.size()));
  }
}

template <class Op>
ScalarField pointwise(const ScalarField& a, const ScalarField& b, const char* what, Op op) {
  require_same_shape(a, b, what);
  ScalarField out(a.shape());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

ScalarField sphere(const Grid& g, std::span<const double> center, double radius) {
  require_length(center, g.dim(), "sphere center");
  if (!(radius > 0.0)) throw ValidationError("sphere: radius must be positive");
  return sample(g, [&](std::span<const double> x) {
    double r2 = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) r2 += (x[a] - center[a]) * (x[a] - center[a]);
    return std::sqrt(r2) - radius;
  });
}

ScalarField cylinder(const Grid& g, std::size_t ignored_axis, std::span<const double> center,
                     double radius) {
  if (g.dim() < 2) throw ValidationError("cylinder: grid needs at least 2 dimensions");
  if (ignored_axis >= g.dim()) {
    throw GridError(GridError::Kind::AxisOutOfRange, ignored_axis,
                    "cylinder: axis " + std::to_string(ignored_axis) + " out of range");
  }
  require_length(center, g.dim(), "cylinder center");
  if (!(radius > 0.0)) throw ValidationError("cylinder: radius must be positive");
  return sample(g, [&](std::span<const double> x) {
    double r2 = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (a == ignored_axis) continue;
      r2 += (x[a] - center[a]) * (x[a] - center[a]);
    }
    return std::sqrt(r2) - radius;
  });
}

ScalarField ellipsoid(const Grid& g, std::span<const double> semiaxis_weights, double radius) {
  require_length(semiaxis_weights, g.dim(), "ellipsoid weights");
  for (double w : semiaxis_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("ellipsoid: weights must be positive");
  }
  if (!std::isfinite(radius)) throw ValidationError("ellipsoid: radius must be finite");
  return sample(g, [&](std::span<const double> x) {
    double e = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) e += semiaxis_weights[a] * x[a] * x[a];
    return e - radius;
  });
}

ScalarField hyper_rectangle(const Grid& g, std::span<const double> lower,
                            std::span<const double> upper) {
  require_length(lower, g.dim(), "hyper_rectangle lower");
  require_length(upper, g.dim(), "hyper_rectangle upper");
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (!(lower[a] < upper[a])) {
      throw ValidationError("hyper_rectangle: degenerate box along axis " + std::to_string(a));
    }
  }
  return sample(g, [&](std::span<const double> x) {
    // q_a > 0 outside the slab of axis a, negative inside.
    double outside2 = 0.0;
    double inside = -INFINITY;
    for (std::size_t a = 0; a < x.size(); ++a) {
      const double mid = 0.5 * (lower[a] + upper[a]);
      const double half = 0.5 * (upper[a] - lower[a]);
      const double q = std::abs(x[a] - mid) - half;
      if (q > 0.0) outside2 += q * q;
      inside = std::max(inside, q);
    }
    return std::sqrt(outside2) + std::min(inside, 0.0);
  });
}

ScalarField csg_union(const ScalarField& a, const ScalarField& b) {
  return pointwise(a, b, "csg_union", [](double x, double y) { return std::min(x, y); });
}

ScalarField csg_intersect(const ScalarField& a, const ScalarField& b) {
  return pointwise(a, b, "csg_intersect", [](double x, double y) { return std::max(x, y); });
}

ScalarField csg_complement(const ScalarField& a) {
  ScalarField out(a.shape());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

ScalarField csg_difference(const ScalarField& a, const ScalarField& b) {
  return pointwise(a, b, "csg_difference", [](double x, double y) { return std::max(x, -y); });
}

}  // namespace hjls
