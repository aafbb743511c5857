#include <cmath>

#include "doctest.h"
#include "hjls/errors.hpp"
#include "hjls/grid.hpp"
#include "hjls/shapes.hpp"
#include "unit/support.hpp"

using namespace hjls;
using hjls::testing::Rng;

namespace {

const Grid& cube5() {
  static const Grid g = create_grid({-2, -2, -2}, {2, 2, 2}, {5, 5, 5});
  return g;
}

double node_distance(const Grid& g, std::size_t a, std::size_t b) {
  double s = 0.0;
  std::size_t ra = a, rb = b;
  for (std::size_t axis = g.dim(); axis-- > 0;) {
    const std::size_t n = g.counts()[axis];
    const double d = g.axis_nodes(axis)[ra % n] - g.axis_nodes(axis)[rb % n];
    s += d * d;
    ra /= n;
    rb /= n;
  }
  return std::sqrt(s);
}

ScalarField random_field(Rng& rng, const Shape& shape) {
  std::vector<double> v(shape_size(shape));
  for (double& x : v) x = rng.uniform(-5, 5);
  return ScalarField(shape, v);
}

}  // namespace

TEST_SUITE("shapes") {
  TEST_CASE("sphere is the exact signed distance") {
    const std::vector<double> c{0, 0, 0};
    const ScalarField s = sphere(cube5(), c, 1.0);
    CHECK(s.at({2, 2, 2}) == -1.0);
    CHECK(s.at({4, 2, 2}) == 1.0);
    CHECK(s.at({3, 2, 2}) == 0.0);
    CHECK(s.at({4, 4, 2}) == doctest::Approx(std::sqrt(8.0) - 1.0));
  }

  TEST_CASE("sphere validates radius and center length") {
    CHECK_THROWS_AS(sphere(cube5(), std::vector<double>{0, 0, 0}, 0.0), ValidationError);
    CHECK_THROWS_AS(sphere(cube5(), std::vector<double>{0, 0}, 1.0), ValidationError);
  }

  TEST_CASE("cylinder is constant along its ignored axis") {
    const ScalarField c = cylinder(cube5(), 2, std::vector<double>{0, 0, 123.0}, 1.5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 1; k < 5; ++k) CHECK(c.at({i, j, k}) == c.at({i, j, 0}));
    CHECK(c.at({2, 2, 3}) == -1.5);
  }

  TEST_CASE("cylinder radius 1.5 at planar distance 3 gives 1.5") {
    const Grid g = create_grid({-3, -3, 0}, {3, 3, 1}, {7, 7, 2});
    const ScalarField c = cylinder(g, 2, std::vector<double>{0, 0, 0}, 1.5);
    CHECK(c.at({6, 3, 0}) == doctest::Approx(1.5));
    CHECK(c.at({3, 0, 1}) == doctest::Approx(1.5));
  }

  TEST_CASE("cylinder errors") {
    CHECK_THROWS_AS(cylinder(cube5(), 3, std::vector<double>{0, 0, 0}, 1.0), GridError);
    CHECK_THROWS_AS(cylinder(cube5(), 0, std::vector<double>{0, 0, 0}, -1.0), ValidationError);
    CHECK_THROWS_AS(cylinder(hjls::testing::line_grid(5, 0, 1), 0, std::vector<double>{0}, 1.0), ValidationError);
  }

  TEST_CASE("ellipsoid uses the weighted quadratic form") {
    const ScalarField e = ellipsoid(cube5(), std::vector<double>{1, 4, 9}, 0.5);
    CHECK(e.at({2, 2, 2}) == -0.5);
    CHECK(e.at({3, 4, 0}) == doctest::Approx(1 + 16 + 36 - 0.5));
  }

  TEST_CASE("two-axis ellipsoid has no third term") {
    const Grid g = create_grid({-2, -2}, {2, 2}, {5, 5});
    const ScalarField e = ellipsoid(g, std::vector<double>{1, 4}, 1.0);
    CHECK(e.at({4, 4}) == doctest::Approx(4 + 16 - 1.0));
    CHECK_THROWS_AS(ellipsoid(g, std::vector<double>{1, 4, 9}, 1.0), ValidationError);
    CHECK_THROWS_AS(ellipsoid(g, std::vector<double>{1, 0}, 1.0), ValidationError);
  }

  TEST_CASE("unit-weight ellipsoid shares the sphere's interior") {
    const Grid g = create_grid({-2, -2, -2}, {2, 2, 2}, {21, 21, 21});
    const double r = 1.3;
    const ScalarField e = ellipsoid(g, std::vector<double>{1, 1, 1}, r * r);
    const ScalarField s = sphere(g, std::vector<double>{0, 0, 0}, r);
    for (std::size_t i = 0; i < e.size(); ++i) CHECK((e[i] < 0) == (s[i] < 0));
  }

  TEST_CASE("box signed distance") {
    const Grid g = create_grid({-2, -2}, {2, 2}, {9, 9});
    const ScalarField b = hyper_rectangle(g, std::vector<double>{-1, -0.5}, std::vector<double>{1, 0.5});
    CHECK(b.at({4, 4}) == doctest::Approx(-0.5));
    CHECK(b.at({6, 5}) == doctest::Approx(0.0));
    CHECK(b.at({8, 4}) == doctest::Approx(1.0));
    CHECK(b.at({8, 8}) == doctest::Approx(std::hypot(1.0, 1.5)));
    CHECK_THROWS_AS(hyper_rectangle(g, std::vector<double>{0, 0}, std::vector<double>{0, 1}), ValidationError);
  }

  TEST_CASE("boolean operations on identical inputs") {
    Rng rng(3);
    const ScalarField f = random_field(rng, {4, 5});
    CHECK(csg_union(f, f) == f);
    CHECK(csg_intersect(f, f) == f);
    CHECK(csg_complement(csg_complement(f)) == f);
  }

  TEST_CASE("difference is intersection with the complement") {
    Rng rng(4);
    const ScalarField a = random_field(rng, {6, 6});
    const ScalarField b = random_field(rng, {6, 6});
    CHECK(csg_difference(a, b) == csg_intersect(a, csg_complement(b)));
    CHECK_THROWS_AS(csg_union(a, ScalarField({36})), ShapeMismatchError);
  }

  TEST_CASE("property: De Morgan and union algebra hold bit-exactly") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const Shape shape{rng.index(1, 6), rng.index(1, 6)};
      const ScalarField a = random_field(rng, shape);
      const ScalarField b = random_field(rng, shape);
      const ScalarField c = random_field(rng, shape);
      CHECK(csg_complement(csg_union(a, b)) == csg_intersect(csg_complement(a), csg_complement(b)));
      CHECK(csg_union(a, b) == csg_union(b, a));
      CHECK(csg_union(csg_union(a, b), c) == csg_union(a, csg_union(b, c)));
    }
  }

  TEST_CASE("property: sphere and box are 1-Lipschitz over random node pairs") {
    Rng rng(6);
    const Grid g = create_grid({-3, -2, -1}, {3, 2, 1}, {13, 9, 7});
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<double> c{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const std::vector<double> lo{rng.uniform(-2, -0.5), rng.uniform(-1.5, -0.5), rng.uniform(-0.8, -0.1)};
      const std::vector<double> hi{rng.uniform(0.1, 2), rng.uniform(0.1, 1.5), rng.uniform(0.1, 0.8)};
      const ScalarField s = sphere(g, c, rng.uniform(0.2, 2));
      const ScalarField b = hyper_rectangle(g, lo, hi);
      for (int pair = 0; pair < 200; ++pair) {
        const std::size_t i = rng.index(0, g.node_count() - 1);
        const std::size_t j = rng.index(0, g.node_count() - 1);
        const double d = node_distance(g, i, j);
        CHECK(std::abs(s[i] - s[j]) <= d + 1e-12);
        CHECK(std::abs(b[i] - b[j]) <= d + 1e-12);
      }
    }
  }
}
