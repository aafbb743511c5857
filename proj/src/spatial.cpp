#include "hjls/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hjls/errors.hpp"

namespace hjls {

std::string_view scheme_name(DerivativeScheme s) noexcept {
  switch (s) {
    case DerivativeScheme::First: return "first";
    case DerivativeScheme::Eno2: return "eno2";
    case DerivativeScheme::Eno3: return "eno3";
    case DerivativeScheme::Weno5: return "weno5";
  }
  return "unknown";
}

DerivativeScheme parse_scheme(std::string_view name) {
  for (auto s : {DerivativeScheme::First, DerivativeScheme::Eno2, DerivativeScheme::Eno3,
                 DerivativeScheme::Weno5}) {
    if (scheme_name(s) == name) return s;
  }
  throw ValidationError("unknown derivative scheme '" + std::string(name) +
                        "' (expected first, eno2, eno3 or weno5)");
}

std::size_t ghost_width(DerivativeScheme s) noexcept {
  switch (s) {
    case DerivativeScheme::First: return 1;
    case DerivativeScheme::Eno2: return 2;
    case DerivativeScheme::Eno3:
    case DerivativeScheme::Weno5: return 3;
  }
  return 3;
}

std::size_t min_axis_nodes(DerivativeScheme s) noexcept { return 2 * ghost_width(s) + 3; }

DividedDifferenceTable divided_differences(std::span<const double> line, double dx) {
  const std::size_t n = line.size();
  DividedDifferenceTable t;
  t.d0.assign(line.begin(), line.end());
  t.d1.assign(n, 0.0);
  t.d2.assign(n, 0.0);
  t.d3.assign(n, 0.0);
  for (std::size_t j = 0; j + 1 < n; ++j) t.d1[j] = (line[j + 1] - line[j]) / dx;
  for (std::size_t j = 1; j + 1 < n; ++j) t.d2[j] = (t.d1[j] - t.d1[j - 1]) / (2.0 * dx);
  for (std::size_t j = 1; j + 2 < n; ++j) t.d3[j] = (t.d2[j + 1] - t.d2[j]) / (3.0 * dx);
  return t;
}

std::array<double, 3> weno_substencils(std::span<const double, 5> d) noexcept {
  return {
      d[0] / 3.0 - 7.0 * d[1] / 6.0 + 11.0 * d[2] / 6.0,
      -d[1] / 6.0 + 5.0 * d[2] / 6.0 + d[3] / 3.0,
      d[2] / 3.0 + 5.0 * d[3] / 6.0 - d[4] / 6.0,
  };
}

WenoWorkspace weno_weights(std::span<const double, 5> d, WenoEpsilon mode) {
  constexpr std::array<double, 3> kOptimal{0.1, 0.6, 0.3};
  WenoWorkspace ws;
  auto sq = [](double x) { return x * x; };
  ws.sigma[0] = 13.0 / 12.0 * sq(d[0] - 2.0 * d[1] + d[2]) + 0.25 * sq(d[0] - 4.0 * d[1] + 3.0 * d[2]);
  ws.sigma[1] = 13.0 / 12.0 * sq(d[1] - 2.0 * d[2] + d[3]) + 0.25 * sq(d[1] - d[3]);
  ws.sigma[2] = 13.0 / 12.0 * sq(d[2] - 2.0 * d[3] + d[4]) + 0.25 * sq(3.0 * d[2] - 4.0 * d[3] + d[4]);

  double m = mode == WenoEpsilon::MaxSquared ? sq(d[0]) : d[0];
  for (std::size_t k = 1; k < 5; ++k) m = std::max(m, mode == WenoEpsilon::MaxSquared ? sq(d[k]) : d[k]);
  ws.eps = 1e-6 * m + 1e-99;

  double total = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    ws.alpha[k] = kOptimal[k] / sq(ws.sigma[k] + ws.eps);
    total += ws.alpha[k];
  }
  for (std::size_t k = 0; k < 3; ++k) ws.w[k] = ws.alpha[k] / total;
  return ws;
}

namespace {

void check_inputs(const Grid& g, const ScalarField& f, std::size_t axis, DerivativeScheme s,
                  const char* name) {
  g.require_matches(f, name);
  if (axis >= g.dim()) {
    throw GridError(GridError::Kind::AxisOutOfRange, axis,
                    std::string(name) + ": axis " + std::to_string(axis) + " out of range");
  }
  if (g.counts()[axis] < min_axis_nodes(s)) {
    throw GridError(GridError::Kind::TooFewNodes, axis,
                    std::string(name) + ": axis " + std::to_string(axis) + " has " +
                        std::to_string(g.counts()[axis]) + " nodes, scheme " +
                        std::string(scheme_name(s)) + " needs at least " +
                        std::to_string(min_axis_nodes(s)));
  }
}

// Runs kernel(ext, dx, width, left, right) on every ghost-extended line.
// `left`/`right` have one entry per interior node of the line.
template <class Kernel>
DerivativePair per_line(const Grid& g, const ScalarField& f, std::size_t axis, std::size_t width,
                        Kernel&& kernel) {
  DerivativePair out{ScalarField(f.shape()), ScalarField(f.shape()), axis};
  const std::size_t n = g.counts()[axis];
  const double dx = g.spacings()[axis];
  std::vector<double> line(n), ext(n + 2 * width), left(n), right(n);
  for_each_line(f.shape(), axis, [&](std::size_t off, std::size_t stride) {
    for (std::size_t k = 0; k < n; ++k) line[k] = f[off + k * stride];
    extend_line(g.boundary(axis), line, width, ext);
    kernel(std::span<const double>(ext), dx, width, std::span<double>(left), std::span<double>(right));
    for (std::size_t k = 0; k < n; ++k) {
      out.left[off + k * stride] = left[k];
      out.right[off + k * stride] = right[k];
    }
  });
  return out;
}

}  // namespace

DerivativePair upwind_first_first(const Grid& g, const ScalarField& f, std::size_t axis) {
  check_inputs(g, f, axis, DerivativeScheme::First, "upwind_first_first");
  return per_line(g, f, axis, 1,
                  [](std::span<const double> ext, double dx, std::size_t w, std::span<double> left,
                     std::span<double> right) {
                    for (std::size_t i = 0; i < left.size(); ++i) {
                      const std::size_t j = i + w;
                      left[i] = (ext[j] - ext[j - 1]) / dx;
                      right[i] = (ext[j + 1] - ext[j]) / dx;
                    }
                  });
}

namespace {

// Picks the smaller-magnitude second difference; ties go to the first.
// Returns the chosen value and whether the left candidate won.
inline std::pair<double, bool> pick(double first, double second) {
  return std::abs(first) <= std::abs(second) ? std::pair{first, true} : std::pair{second, false};
}

// ENO derivative at extended index j, with k = j-1 (left) or k = j (right).
// With third_order set, adds the cubic correction on top of the quadratic one.
inline double eno_at(const DividedDifferenceTable& t, std::size_t j, std::size_t k, double dx,
                     bool third_order) {
  const auto [c, took_k] = pick(t.d2[k], t.d2[k + 1]);
  const double rel = static_cast<double>(j) - static_cast<double>(k);
  double deriv = t.d1[k] + c * (2.0 * rel - 1.0) * dx;
  if (third_order) {
    const std::size_t kstar = took_k ? k - 1 : k;
    const double cstar = pick(t.d3[kstar], t.d3[kstar + 1]).first;
    const double r = static_cast<double>(j) - static_cast<double>(kstar);
    deriv += cstar * (3.0 * r * r - 6.0 * r + 2.0) * dx * dx;
  }
  return deriv;
}

DerivativePair eno(const Grid& g, const ScalarField& f, std::size_t axis, bool third_order) {
  const std::size_t width = third_order ? 3 : 2;
  return per_line(g, f, axis, width,
                  [third_order](std::span<const double> ext, double dx, std::size_t w,
                                std::span<double> left, std::span<double> right) {
                    const auto table = divided_differences(ext, dx);
                    for (std::size_t i = 0; i < left.size(); ++i) {
                      const std::size_t j = i + w;
                      left[i] = eno_at(table, j, j - 1, dx, third_order);
                      right[i] = eno_at(table, j, j, dx, third_order);
                    }
                  });
}

}  // namespace

DerivativePair upwind_first_eno2(const Grid& g, const ScalarField& f, std::size_t axis) {
  check_inputs(g, f, axis, DerivativeScheme::Eno2, "upwind_first_eno2");
  return eno(g, f, axis, false);
}

DerivativePair upwind_first_eno3(const Grid& g, const ScalarField& f, std::size_t axis) {
  check_inputs(g, f, axis, DerivativeScheme::Eno3, "upwind_first_eno3");
  return eno(g, f, axis, true);
}

DerivativePair upwind_first_weno5(const Grid& g, const ScalarField& f, std::size_t axis,
                                  WenoEpsilon mode) {
  check_inputs(g, f, axis, DerivativeScheme::Weno5, "upwind_first_weno5");
  return per_line(g, f, axis, 3,
                  [mode](std::span<const double> ext, double dx, std::size_t w,
                         std::span<double> left, std::span<double> right) {
                    std::vector<double> d1(ext.size() - 1);
                    for (std::size_t j = 0; j + 1 < ext.size(); ++j) d1[j] = (ext[j + 1] - ext[j]) / dx;
                    std::array<double, 5> d{};
                    auto combine = [mode](const std::array<double, 5>& v) {
                      const auto ws = weno_weights(v, mode);
                      const auto est = weno_substencils(v);
                      return ws.w[0] * est[0] + ws.w[1] * est[1] + ws.w[2] * est[2];
                    };
                    for (std::size_t i = 0; i < left.size(); ++i) {
                      const std::size_t j = i + w;
                      // Forward differences at j-3 .. j+1, upwind end first.
                      for (std::size_t k = 0; k < 5; ++k) d[k] = d1[j - 3 + k];
                      left[i] = combine(d);
                      // Mirrored: forward differences at j+2 down to j-2.
                      for (std::size_t k = 0; k < 5; ++k) d[k] = d1[j + 2 - k];
                      right[i] = combine(d);
                    }
                  });
}

DerivativePair upwind_derivative(DerivativeScheme s, const Grid& g, const ScalarField& f,
                                 std::size_t axis) {
  switch (s) {
    case DerivativeScheme::First: return upwind_first_first(g, f, axis);
    case DerivativeScheme::Eno2: return upwind_first_eno2(g, f, axis);
    case DerivativeScheme::Eno3: return upwind_first_eno3(g, f, axis);
    case DerivativeScheme::Weno5: return upwind_first_weno5(g, f, axis);
  }
  throw ValidationError("upwind_derivative: unknown scheme");
}

}  // namespace hjls
