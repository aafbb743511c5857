#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hjls/field.hpp"

namespace hjls {

struct Periodic {
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

/// Ghost values continue the slope of the two outermost nodes.
struct ExtrapolateLinear {
  friend bool operator==(const ExtrapolateLinear&, const ExtrapolateLinear&) = default;
};

struct DirichletConstant {
  double value = 0.0;
  friend bool operator==(const DirichletConstant&, const DirichletConstant&) = default;
};

using BoundaryCondition = std::variant<Periodic, ExtrapolateLinear, DirichletConstant>;

bool is_periodic(const BoundaryCondition& bc) noexcept;
std::string boundary_name(const BoundaryCondition& bc);

/// Uniform Cartesian grid. Immutable once constructed.
///
/// Non-periodic axes include both endpoints: dx = (max - min) / (N - 1).
/// Periodic axes exclude the upper endpoint: dx = (max - min) / N, so the
/// node after the last one wraps onto `min`.
class Grid {
 public:
  Grid(std::vector<double> mins, std::vector<double> maxs, std::vector<std::size_t> counts,
       std::vector<BoundaryCondition> boundary);

  std::size_t dim() const noexcept { return counts_.size(); }
  const std::vector<double>& mins() const noexcept { return mins_; }
  const std::vector<double>& maxs() const noexcept { return maxs_; }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  const std::vector<double>& spacings() const noexcept { return spacings_; }
  const std::vector<double>& axis_nodes(std::size_t axis) const;
  const BoundaryCondition& boundary(std::size_t axis) const;

  const Shape& shape() const noexcept { return counts_; }
  std::size_t node_count() const noexcept { return node_count_; }
  double cell_volume() const noexcept;

  bool matches(const ScalarField& f) const noexcept { return f.shape() == counts_; }
  void require_matches(const ScalarField& f, const char* context) const;

 private:
  std::vector<double> mins_;
  std::vector<double> maxs_;
  std::vector<std::size_t> counts_;
  std::vector<double> spacings_;
  std::vector<std::vector<double>> axis_nodes_;
  std::vector<BoundaryCondition> boundary_;
  std::size_t node_count_ = 0;
};

/// Axes listed in `periodic_axes` get Periodic boundaries, all others
/// ExtrapolateLinear.
Grid create_grid(std::vector<double> mins, std::vector<double> maxs, std::vector<std::size_t> counts,
                 const std::set<std::size_t>& periodic_axes = {});

/// Field holding the `axis` coordinate of every node.
ScalarField mesh_coordinates(const Grid& g, std::size_t axis);

/// Evaluates fn(std::span<const double> x) at every node.
template <class Fn>
ScalarField sample(const Grid& g, Fn&& fn) {
  ScalarField out(g.shape());
  const std::size_t d = g.dim();
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> x(d);
  for (std::size_t a = 0; a < d; ++a) x[a] = g.axis_nodes(a)[0];
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = fn(std::span<const double>(x));
    for (std::size_t a = d; a-- > 0;) {
      if (++idx[a] < g.counts()[a]) {
        x[a] = g.axis_nodes(a)[idx[a]];
        break;
      }
      idx[a] = 0;
      x[a] = g.axis_nodes(a)[0];
    }
  }
  return out;
}

/// Writes `line` into `out` (size line.size() + 2*width) with `width` ghost
/// values on each side, filled according to `bc`.
void extend_line(const BoundaryCondition& bc, std::span<const double> line, std::size_t width,
                 std::span<double> out);

/// Returns a copy of `f` grown by 2*width along every axis. Axes are extended
/// one after another, so corner ghosts combine the rules of both axes.
ScalarField extend_with_ghost_cells(const Grid& g, const ScalarField& f, std::size_t width);

ScalarField strip_ghost_cells(const ScalarField& f, std::size_t width);

}  // namespace hjls
