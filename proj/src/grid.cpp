#include "hjls/grid.hpp"

#include <cmath>
#include <string>

#include "hjls/errors.hpp"

namespace hjls {

bool is_periodic(const BoundaryCondition& bc) noexcept {
  return std::holds_alternative<Periodic>(bc);
}

std::string boundary_name(const BoundaryCondition& bc) {
  if (std::holds_alternative<Periodic>(bc)) return "periodic";
  if (std::holds_alternative<ExtrapolateLinear>(bc)) return "extrapolate_linear";
  return "dirichlet(" + std::to_string(std::get<DirichletConstant>(bc).value) + ")";
}

Grid::Grid(std::vector<double> mins, std::vector<double> maxs, std::vector<std::size_t> counts,
           std::vector<BoundaryCondition> boundary)
    : mins_(std::move(mins)),
      maxs_(std::move(maxs)),
      counts_(std::move(counts)),
      boundary_(std::move(boundary)) {
  const std::size_t d = mins_.size();
  if (d == 0) throw GridError(GridError::Kind::DimensionMismatch, 0, "grid: zero dimensions");
  if (maxs_.size() != d) {
    throw GridError(GridError::Kind::DimensionMismatch, std::min(d, maxs_.size()),
                    "grid: maxs has " + std::to_string(maxs_.size()) + " entries, mins has " +
                        std::to_string(d));
  }
  if (counts_.size() != d) {
    throw GridError(GridError::Kind::DimensionMismatch, std::min(d, counts_.size()),
                    "grid: counts has " + std::to_string(counts_.size()) + " entries, mins has " +
                        std::to_string(d));
  }
  if (boundary_.size() != d) {
    throw GridError(GridError::Kind::DimensionMismatch, std::min(d, boundary_.size()),
                    "grid: boundary has " + std::to_string(boundary_.size()) +
                        " entries, mins has " + std::to_string(d));
  }

  node_count_ = 1;
  spacings_.resize(d);
  axis_nodes_.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!std::isfinite(mins_[i]) || !std::isfinite(maxs_[i]) || !(mins_[i] < maxs_[i])) {
      throw GridError(GridError::Kind::NonPositiveExtent, i,
                      "grid: axis " + std::to_string(i) + " has non-positive extent [" +
                          std::to_string(mins_[i]) + ", " + std::to_string(maxs_[i]) + "]");
    }
    if (counts_[i] < 2) {
      throw GridError(GridError::Kind::TooFewNodes, i,
                      "grid: axis " + std::to_string(i) + " has " + std::to_string(counts_[i]) +
                          " nodes, need at least 2");
    }
    const bool periodic = is_periodic(boundary_[i]);
    const double extent = maxs_[i] - mins_[i];
    spacings_[i] = periodic ? extent / static_cast<double>(counts_[i])
                            : extent / static_cast<double>(counts_[i] - 1);
    auto& nodes = axis_nodes_[i];
    nodes.resize(counts_[i]);
    for (std::size_t k = 0; k < counts_[i]; ++k) {
      nodes[k] = mins_[i] + static_cast<double>(k) * spacings_[i];
    }
    if (!periodic) nodes.back() = maxs_[i];
    node_count_ *= counts_[i];
  }
}

const std::vector<double>& Grid::axis_nodes(std::size_t axis) const {
  if (axis >= dim()) {
    throw GridError(GridError::Kind::AxisOutOfRange, axis,
                    "grid: axis " + std::to_string(axis) + " out of range");
  }
  return axis_nodes_[axis];
}

const BoundaryCondition& Grid::boundary(std::size_t axis) const {
  if (axis >= dim()) {
    throw GridError(GridError::Kind::AxisOutOfRange, axis,
                    "grid: axis " + std::to_string(axis) + " out of range");
  }
  return boundary_[axis];
}

double Grid::cell_volume() const noexcept {
  double v = 1.0;
  for (double dx : spacings_) v *= dx;
  return v;
}

void Grid::require_matches(const ScalarField& f, const char* context) const {
  if (!matches(f)) {
    throw ShapeMismatchError(std::string(context) + ": field shape does not match grid");
  }
}

Grid create_grid(std::vector<double> mins, std::vector<double> maxs, std::vector<std::size_t> counts,
                 const std::set<std::size_t>& periodic_axes) {
  for (auto a : periodic_axes) {
    if (a >= mins.size()) {
      throw GridError(GridError::Kind::AxisOutOfRange, a,
                      "grid: periodic axis " + std::to_string(a) + " out of range");
    }
  }
  std::vector<BoundaryCondition> bc(mins.size(), ExtrapolateLinear{});
  for (auto a : periodic_axes) bc[a] = Periodic{};
  return Grid(std::move(mins), std::move(maxs), std::move(counts), std::move(bc));
}

ScalarField mesh_coordinates(const Grid& g, std::size_t axis) {
  if (axis >= g.dim()) {
    throw GridError(GridError::Kind::AxisOutOfRange, axis,
                    "mesh_coordinates: axis " + std::to_string(axis) + " out of range");
  }
  return sample(g, [axis](std::span<const double> x) { return x[axis]; });
}

void extend_line(const BoundaryCondition& bc, std::span<const double> line, std::size_t width,
                 std::span<double> out) {
  const std::size_t n = line.size();
  for (std::size_t k = 0; k < n; ++k) out[width + k] = line[k];

  if (std::holds_alternative<Periodic>(bc)) {
    for (std::size_t k = 0; k < width; ++k) {
      out[k] = line[(n - width % n + k) % n];
      out[width + n + k] = line[k % n];
    }
  } else if (std::holds_alternative<ExtrapolateLinear>(bc)) {
    const double lo_slope = line[0] - line[1];
    const double hi_slope = line[n - 1] - line[n - 2];
    for (std::size_t d = 1; d <= width; ++d) {
      out[width - d] = line[0] + static_cast<double>(d) * lo_slope;
      out[width + n - 1 + d] = line[n - 1] + static_cast<double>(d) * hi_slope;
    }
  } else {
    const double value = std::get<DirichletConstant>(bc).value;
    for (std::size_t k = 0; k < width; ++k) {
      out[k] = value;
      out[width + n + k] = value;
    }
  }
}

ScalarField extend_with_ghost_cells(const Grid& g, const ScalarField& f, std::size_t width) {
  g.require_matches(f, "extend_with_ghost_cells");
  if (width == 0) throw ValidationError("extend_with_ghost_cells: width must be positive");
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (is_periodic(g.boundary(a)) && width > g.counts()[a]) {
      throw GridError(GridError::Kind::GhostWidthTooLarge, a,
                      "extend_with_ghost_cells: width " + std::to_string(width) +
                          " exceeds the " + std::to_string(g.counts()[a]) +
                          " nodes of periodic axis " + std::to_string(a));
    }
  }

  ScalarField current = f;
  std::vector<double> line;
  std::vector<double> ext;
  for (std::size_t axis = 0; axis < g.dim(); ++axis) {
    Shape grown = current.shape();
    const std::size_t n = grown[axis];
    grown[axis] += 2 * width;
    ScalarField next(grown);
    line.resize(n);
    ext.resize(n + 2 * width);

    // Lines of `current` and `next` along `axis` pair up in iteration order.
    std::vector<std::size_t> src_offsets;
    std::size_t src_stride = 1;
    for_each_line(current.shape(), axis, [&](std::size_t off, std::size_t s) {
      src_offsets.push_back(off);
      src_stride = s;
    });
    std::size_t li = 0;
    for_each_line(next.shape(), axis, [&](std::size_t off, std::size_t s) {
      const std::size_t src = src_offsets[li++];
      for (std::size_t k = 0; k < n; ++k) line[k] = current[src + k * src_stride];
      extend_line(g.boundary(axis), line, width, ext);
      for (std::size_t k = 0; k < ext.size(); ++k) next[off + k * s] = ext[k];
    });
    current = std::move(next);
  }
  return current;
}

ScalarField strip_ghost_cells(const ScalarField& f, std::size_t width) {
  Shape inner = f.shape();
  for (auto& c : inner) {
    if (c < 2 * width + 1) throw ValidationError("strip_ghost_cells: field too small for width");
    c -= 2 * width;
  }
  ScalarField out(inner);
  const std::size_t d = inner.size();
  std::vector<std::size_t> idx(d, 0);
  std::vector<std::size_t> src(d);
  for (std::size_t n = 0; n < out.size(); ++n) {
    for (std::size_t a = 0; a < d; ++a) src[a] = idx[a] + width;
    out[n] = f.at(src);
    for (std::size_t a = d; a-- > 0;) {
      if (++idx[a] < inner[a]) break;
      idx[a] = 0;
    }
  }
  return out;
}

}  // namespace hjls
