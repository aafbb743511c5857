#include <cstring>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hjls/errors.hpp"
#include "hjls/snapshot_io.hpp"
#include "unit/support.hpp"

using namespace hjls;
using hjls::testing::Rng;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hjls_snapshot_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<char> read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_bytes(const fs::path& p, const std::vector<char>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_SUITE("snapshot_io") {
  TEST_CASE("header layout") {
    const Grid g = create_grid({0, 0}, {1, 1}, {2, 3});
    const ScalarField f(g.shape(), std::vector<double>{0.5, -1, 2, 3, 4, 5});
    const fs::path p = scratch("layout.f64");
    export_field(f, g, p);
    const auto bytes = read_bytes(p);
    REQUIRE(bytes.size() == 16 + 2 * 8 + 6 * 8);
    CHECK(std::string(bytes.data(), 4) == "HJLS");
    std::uint32_t version, dim, reserved;
    std::uint64_t n0, n1;
    double first;
    std::memcpy(&version, bytes.data() + 4, 4);
    std::memcpy(&dim, bytes.data() + 8, 4);
    std::memcpy(&reserved, bytes.data() + 12, 4);
    std::memcpy(&n0, bytes.data() + 16, 8);
    std::memcpy(&n1, bytes.data() + 24, 8);
    std::memcpy(&first, bytes.data() + 32, 8);
    CHECK(version == 1);
    CHECK(dim == 2);
    CHECK(reserved == 0);
    CHECK(n0 == 2);
    CHECK(n1 == 3);
    CHECK(first == 0.5);
  }

  TEST_CASE("size of a 41 cubed snapshot") {
    const Shape shape{41, 41, 41};
    CHECK(snapshot_file_size(shape) == 16 + 3 * 8 + 41u * 41u * 41u * 8u);
    const Grid g = create_grid({-5, -5, -M_PI}, {5, 5, M_PI}, {41, 41, 41}, {2});
    const fs::path p = scratch("cube41.f64");
    export_field(ScalarField(g.shape(), 1.0), g, p);
    CHECK(fs::file_size(p) == snapshot_file_size(shape));
  }

  TEST_CASE("property: round trip is bit-exact") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t dim = rng.index(1, 4);
      std::vector<double> mins(dim, 0.0), maxs(dim, 1.0);
      std::vector<std::size_t> counts;
      for (std::size_t a = 0; a < dim; ++a) counts.push_back(rng.index(2, 7));
      const Grid g = create_grid(mins, maxs, counts);
      std::vector<double> vals(g.node_count());
      for (double& v : vals) v = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform(-300, 300) / 10);
      const ScalarField f(g.shape(), vals);
      const fs::path p = scratch("round.f64");
      export_field(f, g, p);
      const ScalarField back = import_field(p);
      CHECK(back.shape() == f.shape());
      CHECK(std::memcmp(back.values().data(), f.values().data(), f.size() * sizeof(double)) == 0);
    }
  }

  TEST_CASE("truncated file names both byte counts") {
    const Grid g = create_grid({0}, {1}, {10});
    const fs::path p = scratch("trunc.f64");
    export_field(ScalarField(g.shape(), 2.0), g, p);
    auto bytes = read_bytes(p);
    bytes.resize(bytes.size() - 5);
    write_bytes(p, bytes);
    CHECK_THROWS_WITH_AS(import_field(p), doctest::Contains("expected 104"), IoError);
    CHECK_THROWS_WITH_AS(import_field(p), doctest::Contains("99"), IoError);

    bytes.resize(10);
    write_bytes(p, bytes);
    CHECK_THROWS_AS(import_field(p), IoError);
  }

  TEST_CASE("corrupted magic, version and trailing bytes are rejected") {
    const Grid g = create_grid({0}, {1}, {4});
    const fs::path p = scratch("bad.f64");
    export_field(ScalarField(g.shape()), g, p);
    const auto good = read_bytes(p);

    auto bad_magic = good;
    bad_magic[1] = 'X';
    write_bytes(p, bad_magic);
    CHECK_THROWS_WITH_AS(import_field(p), doctest::Contains("magic"), IoError);

    auto bad_version = good;
    bad_version[4] = 7;
    write_bytes(p, bad_version);
    CHECK_THROWS_WITH_AS(import_field(p), doctest::Contains("version"), IoError);

    auto longer = good;
    longer.push_back(0);
    write_bytes(p, longer);
    CHECK_THROWS_AS(import_field(p), IoError);

    CHECK_THROWS_AS(import_field(scratch("does_not_exist.f64")), IoError);
  }

  TEST_CASE("export validates the field against the grid") {
    const Grid g = create_grid({0}, {1}, {4});
    CHECK_THROWS_AS(export_field(ScalarField({5}), g, scratch("x.f64")), ShapeMismatchError);
    CHECK_THROWS_AS(export_field(ScalarField({4}), g, fs::path("/nonexistent_dir/x.f64")), IoError);
  }
}
