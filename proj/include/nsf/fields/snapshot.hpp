#pragma once

#include <string>
#include <utility>

#include "nsf/fields/grid.hpp"
#include "nsf/fields/state.hpp"

namespace nsf::fields {

// Snapshot file: plain-text header (dimension, cells per axis, extents, time,
// field list), a "binary" marker line, then the raw row-major little-endian
// 64-bit float payload, one block per field. Roundtrips are bit-exact.
void write_snapshot(const State& s, const Grid& g, const std::string& path);
std::pair<State, Grid> read_snapshot(const std::string& path);

}  // namespace nsf::fields
