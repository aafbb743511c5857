#include "hjls/snapshot_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "hjls/errors.hpp"

namespace hjls {

namespace {

constexpr std::array<char, 4> kMagic{'H', 'J', 'L', 'S'};

template <class U>
void put_le(std::vector<unsigned char>& buf, U value) {
  for (std::size_t b = 0; b < sizeof(U); ++b) buf.push_back(static_cast<unsigned char>(value >> (8 * b)));
}

template <class U>
U get_le(const unsigned char* p) {
  U value = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) value |= static_cast<U>(p[b]) << (8 * b);
  return value;
}

}  // namespace

std::size_t snapshot_file_size(const Shape& shape) {
  return kSnapshotHeaderBytes + shape.size() * sizeof(std::uint64_t) + shape_size(shape) * sizeof(double);
}

void export_field(const ScalarField& f, const Grid& g, const std::filesystem::path& path) {
  g.require_matches(f, "export_field");
  std::vector<unsigned char> buf;
  buf.reserve(snapshot_file_size(f.shape()));
  buf.insert(buf.end(), kMagic.begin(), kMagic.end());
  put_le<std::uint32_t>(buf, kSnapshotVersion);
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(f.dim()));
  put_le<std::uint32_t>(buf, 0);
  for (auto c : f.shape()) put_le<std::uint64_t>(buf, c);
  for (double v : f.values()) put_le<std::uint64_t>(buf, std::bit_cast<std::uint64_t>(v));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("export_field: cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("export_field: write failed for " + path.string());
}

ScalarField import_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("import_field: cannot open " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (buf.size() < kSnapshotHeaderBytes) {
    throw IoError("import_field: " + path.string() + " is truncated: expected at least " +
                  std::to_string(kSnapshotHeaderBytes) + " header bytes, found " + std::to_string(buf.size()));
  }
  if (std::memcmp(buf.data(), kMagic.data(), kMagic.size()) != 0) {
    throw IoError("import_field: " + path.string() + " has bad magic (expected \"HJLS\")");
  }
  const auto version = get_le<std::uint32_t>(buf.data() + 4);
  if (version != kSnapshotVersion) {
    throw IoError("import_field: " + path.string() + " has unsupported version " + std::to_string(version));
  }
  const auto dim = get_le<std::uint32_t>(buf.data() + 8);
  if (dim == 0 || dim > 16) throw IoError("import_field: " + path.string() + " has invalid dim " + std::to_string(dim));

  const std::size_t counts_end = kSnapshotHeaderBytes + dim * sizeof(std::uint64_t);
  if (buf.size() < counts_end) {
    throw IoError("import_field: " + path.string() + " is truncated: expected at least " +
                  std::to_string(counts_end) + " bytes, found " + std::to_string(buf.size()));
  }
  Shape shape(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    shape[a] = get_le<std::uint64_t>(buf.data() + kSnapshotHeaderBytes + a * sizeof(std::uint64_t));
  }
  const std::size_t expected = snapshot_file_size(shape);
  if (buf.size() != expected) {
    throw IoError("import_field: " + path.string() + (buf.size() < expected ? " is truncated" : " size mismatch") +
                  ": expected " + std::to_string(expected) + " bytes, found " + std::to_string(buf.size()));
  }
  std::vector<double> values(shape_size(shape));
  const unsigned char* p = buf.data() + counts_end;
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<double>(get_le<std::uint64_t>(p + i * sizeof(double)));
  }
  try {
    return ScalarField(std::move(shape), std::move(values));
  } catch (const ValidationError& e) {
    throw IoError("import_field: " + path.string() + ": " + e.what());
  }
}

}  // namespace hjls
