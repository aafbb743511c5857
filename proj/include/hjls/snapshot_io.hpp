#pragma once

#include <cstdint>
#include <filesystem>

#include "hjls/field.hpp"
#include "hjls/grid.hpp"

namespace hjls {

// Snapshot file layout, little-endian:
//   bytes 0..3    magic "HJLS"
//   bytes 4..7    u32 version (1)
//   bytes 8..11   u32 dim
//   bytes 12..15  u32 reserved (0)
//   dim x u64     node counts per axis
//   prod(counts) x f64, row-major

inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 16;

std::size_t snapshot_file_size(const Shape& shape);

void export_field(const ScalarField& f, const Grid& g, const std::filesystem::path& path);

/// Reads a snapshot. The returned field carries the stored shape.
ScalarField import_field(const std::filesystem::path& path);

}  // namespace hjls
