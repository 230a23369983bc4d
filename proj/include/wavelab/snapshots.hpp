#pragma once

#include "wavelab/spacetime.hpp"

#include <filesystem>
#include <string>

namespace wavelab {

/// Binary field snapshot: fixed header (kind, geometry, dtype tag) followed
/// by row-major complex samples.  Geometry travels with the data, so a
/// snapshot reloads without external context.

void write_snapshot(const std::filesystem::path& path, const GridField& field);
void write_snapshot(const std::filesystem::path& path, const RadialField& field);

/// Peeks at the header kind tag: "grid" or "radial".
std::string snapshot_kind(const std::filesystem::path& path);

GridField read_grid_snapshot(const std::filesystem::path& path);
RadialField read_radial_snapshot(const std::filesystem::path& path);

/// Space-time snapshot: manifest JSON next to one binary file per node.
template <class F>
void write_spacetime_snapshot(const std::filesystem::path& dir, const SpaceTimeField<F>& u,
                              const std::string& stem);

SpaceTimeField<RadialField> read_radial_spacetime_snapshot(const std::filesystem::path& manifest);

}  // namespace wavelab
