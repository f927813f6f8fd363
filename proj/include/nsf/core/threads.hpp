#pragma once

#include <cstddef>
#include <functional>

// Worker-pool-free tiled parallelism. Work is cut into fixed 4096-cell tiles
// regardless of the thread count, and reductions combine per-tile partials in
// tile order, so results do not depend on NSF_THREADS. Threads only engage
// for ranges large enough to amortize spawning.

namespace nsf::threads {

constexpr size_t kTile = 4096;

// Worker cap from NSF_THREADS (clamped to [1,64]); defaults to the hardware
// concurrency. Read once.
int worker_count();
void set_worker_count(int n);  // tests

// fn(tile_index, begin, end) over [0, n) in kTile chunks, possibly concurrent.
void for_tiles(size_t n, const std::function<void(size_t, size_t, size_t)>& fn);

// Deterministic reduction: partial(begin, end) per tile, combined in tile order.
double reduce_tiles(size_t n, const std::function<double(size_t, size_t)>& partial);

}  // namespace nsf::threads
