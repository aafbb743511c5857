#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hjls/errors.hpp"
#include "hjls/grid.hpp"
#include "unit/support.hpp"

using namespace hjls;
using hjls::testing::Rng;

namespace {

GridError::Kind kind_of(const auto& build) {
  try {
    build();
  } catch (const GridError& e) {
    return e.kind();
  }
  FAIL("expected GridError");
  return GridError::Kind::DimensionMismatch;
}

std::size_t axis_of(const auto& build) {
  try {
    build();
  } catch (const GridError& e) {
    return e.axis();
  }
  FAIL("expected GridError");
  return 99;
}

std::vector<double> extend_1d(const BoundaryCondition& bc, std::vector<double> line, std::size_t width) {
  std::vector<double> out(line.size() + 2 * width);
  extend_line(bc, line, width, out);
  return out;
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("three-axis grid with a periodic angle axis") {
    const double pi = std::numbers::pi;
    const Grid g = create_grid({-5, -5, -pi}, {5, 5, pi}, {41, 41, 41}, {2});
    CHECK(g.dim() == 3);
    CHECK(g.spacings()[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.spacings()[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.spacings()[2] == doctest::Approx(2 * pi / 41).epsilon(1e-15));
    CHECK(g.node_count() == 41u * 41u * 41u);
    CHECK(is_periodic(g.boundary(2)));
    CHECK_FALSE(is_periodic(g.boundary(0)));
    CHECK(g.axis_nodes(0).front() == -5.0);
    CHECK(g.axis_nodes(0).back() == 5.0);
    CHECK(g.axis_nodes(2).back() < pi);
  }

  TEST_CASE("two-node line covers both endpoints") {
    const Grid g = create_grid({0}, {1}, {2});
    CHECK(g.axis_nodes(0) == std::vector<double>{0.0, 1.0});
    CHECK(g.spacings()[0] == 1.0);
  }

  TEST_CASE("periodic line excludes the upper endpoint") {
    const Grid g = create_grid({0}, {1}, {4}, {0});
    CHECK(g.axis_nodes(0) == std::vector<double>{0.0, 0.25, 0.5, 0.75});
    CHECK(g.spacings()[0] == 0.25);
  }

  TEST_CASE("construction errors carry kind and axis") {
    CHECK(kind_of([] { create_grid({0, 0}, {1}, {3, 3}); }) == GridError::Kind::DimensionMismatch);
    CHECK(kind_of([] { create_grid({0, 0}, {1, 1}, {3}); }) == GridError::Kind::DimensionMismatch);
    CHECK(kind_of([] { create_grid({0, 1}, {1, 1}, {3, 3}); }) == GridError::Kind::NonPositiveExtent);
    CHECK(axis_of([] { create_grid({0, 1}, {1, 1}, {3, 3}); }) == 1);
    CHECK(kind_of([] { create_grid({0, 0, 0}, {1, 1, 1}, {3, 3, 1}); }) == GridError::Kind::TooFewNodes);
    CHECK(axis_of([] { create_grid({0, 0, 0}, {1, 1, 1}, {3, 3, 1}); }) == 2);
    CHECK(kind_of([] { create_grid({}, {}, {}); }) == GridError::Kind::DimensionMismatch);
  }

  TEST_CASE("mesh coordinates on a three-node line") {
    const Grid g = create_grid({0}, {1}, {3});
    const ScalarField m = mesh_coordinates(g, 0);
    CHECK(std::vector<double>(m.values().begin(), m.values().end()) == std::vector<double>{0, 0.5, 1});
  }

  TEST_CASE("mesh coordinates follow row-major layout") {
    const Grid g = create_grid({0, 0}, {1, 1}, {2, 2});
    const ScalarField m = mesh_coordinates(g, 1);
    CHECK(std::vector<double>(m.values().begin(), m.values().end()) == std::vector<double>{0, 1, 0, 1});
    const ScalarField m0 = mesh_coordinates(g, 0);
    CHECK(std::vector<double>(m0.values().begin(), m0.values().end()) == std::vector<double>{0, 0, 1, 1});
  }

  TEST_CASE("periodic angle coordinates stay in the half-open interval") {
    const double pi = std::numbers::pi;
    const Grid g = create_grid({-5, -5, -pi}, {5, 5, pi}, {41, 41, 41}, {2});
    const ScalarField th = mesh_coordinates(g, 2);
    for (double v : th.values()) {
      CHECK(v >= -pi);
      CHECK(v < pi);
    }
  }

  TEST_CASE("mesh coordinates reject an axis past the last") {
    const Grid g = create_grid({0}, {1}, {3});
    CHECK(kind_of([&] { mesh_coordinates(g, 1); }) == GridError::Kind::AxisOutOfRange);
  }

  TEST_CASE("mesh coordinates match multi-index lookup") {
    const Grid g = create_grid({-1, 0, 2}, {1, 3, 4}, {3, 4, 5}, {1});
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const ScalarField m = mesh_coordinates(g, axis);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          for (std::size_t k = 0; k < 5; ++k) {
            const std::size_t idx[3] = {i, j, k};
            CHECK(m.at({i, j, k}) == g.axis_nodes(axis)[idx[axis]]);
          }
    }
  }

  TEST_CASE("line extension by boundary kind") {
    CHECK(extend_1d(Periodic{}, {1, 2, 3, 4}, 2) == std::vector<double>{3, 4, 1, 2, 3, 4, 1, 2});
    CHECK(extend_1d(ExtrapolateLinear{}, {0, 1, 2}, 1) == std::vector<double>{-1, 0, 1, 2, 3});
    CHECK(extend_1d(DirichletConstant{7}, {1, 2}, 2) == std::vector<double>{7, 7, 1, 2, 7, 7});
  }

  TEST_CASE("linear extrapolation continues the edge slope for wider ghosts") {
    CHECK(extend_1d(ExtrapolateLinear{}, {0, 1, 4}, 3) == std::vector<double>{-3, -2, -1, 0, 1, 4, 7, 10, 13});
  }

  TEST_CASE("ghost width beyond a periodic axis length is rejected") {
    const Grid g = create_grid({0}, {1}, {3}, {0});
    const ScalarField f(g.shape(), 1.0);
    CHECK_NOTHROW(extend_with_ghost_cells(g, f, 3));
    CHECK(kind_of([&] { extend_with_ghost_cells(g, f, 4); }) == GridError::Kind::GhostWidthTooLarge);
    CHECK_THROWS_AS(extend_with_ghost_cells(g, f, 0), ValidationError);
  }

  TEST_CASE("extension rejects a field of the wrong shape") {
    const Grid g = create_grid({0, 0}, {1, 1}, {3, 3});
    CHECK_THROWS_AS(extend_with_ghost_cells(g, ScalarField({3, 4}), 1), ShapeMismatchError);
  }

  TEST_CASE("property: strip after extend is the identity, bit for bit") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t dim = rng.index(1, 3);
      std::vector<double> mins, maxs;
      std::vector<std::size_t> counts;
      std::vector<BoundaryCondition> bcs;
      for (std::size_t a = 0; a < dim; ++a) {
        mins.push_back(rng.uniform(-3, 0));
        maxs.push_back(mins.back() + rng.uniform(0.5, 4));
        counts.push_back(rng.index(4, 9));
        switch (rng.index(0, 2)) {
          case 0: bcs.emplace_back(Periodic{}); break;
          case 1: bcs.emplace_back(ExtrapolateLinear{}); break;
          default: bcs.emplace_back(DirichletConstant{rng.uniform(-5, 5)});
        }
      }
      const Grid g(mins, maxs, counts, bcs);
      std::vector<double> vals(g.node_count());
      for (double& v : vals) v = rng.uniform(-10, 10);
      const ScalarField f(g.shape(), vals);
      const std::size_t width = rng.index(1, 3);
      const ScalarField ext = extend_with_ghost_cells(g, f, width);
      for (std::size_t a = 0; a < dim; ++a) CHECK(ext.shape()[a] == counts[a] + 2 * width);
      CHECK(strip_ghost_cells(ext, width) == f);
    }
  }

  TEST_CASE("property: periodic ghosts of sin equal sin sampled past the ends") {
    for (std::size_t n : {8u, 17u, 40u}) {
      const Grid g = hjls::testing::periodic_circle(n);
      const ScalarField f = hjls::testing::sample_1d(g, [](double x) { return std::sin(x); });
      const std::size_t width = 3;
      const ScalarField ext = extend_with_ghost_cells(g, f, width);
      const double dx = g.spacings()[0];
      for (std::size_t k = 0; k < ext.size(); ++k) {
        const double x = -std::numbers::pi + (static_cast<double>(k) - static_cast<double>(width)) * dx;
        CHECK(ext[k] == doctest::Approx(std::sin(x)).epsilon(1e-12).scale(1.0));
      }
    }
  }

  TEST_CASE("corner ghosts of a two-axis field combine both axis rules") {
    const Grid g(std::vector<double>{0, 0}, std::vector<double>{1, 1}, std::vector<std::size_t>{2, 2},
                 std::vector<BoundaryCondition>{DirichletConstant{5}, ExtrapolateLinear{}});
    const ScalarField f(g.shape(), std::vector<double>{1, 2, 3, 4});
    const ScalarField ext = extend_with_ghost_cells(g, f, 1);
    // Axis 0 first fills rows with 5; axis 1 then extrapolates along each row.
    CHECK(ext.at({0, 0}) == 5);
    CHECK(ext.at({1, 0}) == 0);
    CHECK(ext.at({1, 3}) == 3);
    CHECK(ext.at({2, 3}) == 5);
  }

  TEST_CASE("cell volume and matching") {
    const Grid g = create_grid({0, 0}, {2, 3}, {3, 4});
    CHECK(g.cell_volume() == doctest::Approx(1.0));
    CHECK(g.matches(ScalarField({3, 4})));
    CHECK_FALSE(g.matches(ScalarField({4, 3})));
    CHECK(boundary_name(g.boundary(0)) == "extrapolate_linear");
  }
}
