#include "nsf/core/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace nsf::threads {
namespace {

int g_workers = 0;

int read_env_workers() {
  if (const char* env = std::getenv("NSF_THREADS")) {
    const int k = std::atoi(env);
    if (k >= 1) return std::min(k, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(std::min(hw, 64u)) : 1;
}

}  // namespace

int worker_count() {
  if (g_workers == 0) g_workers = read_env_workers();
  return g_workers;
}

void set_worker_count(int n) { g_workers = std::clamp(n, 1, 64); }

void for_tiles(size_t n, const std::function<void(size_t, size_t, size_t)>& fn) {
  if (n == 0) return;
  const size_t ntiles = (n + kTile - 1) / kTile;
  const int workers = worker_count();
  if (workers == 1 || ntiles < 2) {
    for (size_t t = 0; t < ntiles; ++t) fn(t, t * kTile, std::min(n, (t + 1) * kTile));
    return;
  }
  const size_t nt = std::min<size_t>(static_cast<size_t>(workers), ntiles);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (size_t w = 0; w < nt; ++w) {
    pool.emplace_back([&, w]() {
      for (size_t t = w; t < ntiles; t += nt) fn(t, t * kTile, std::min(n, (t + 1) * kTile));
    });
  }
  for (auto& th : pool) th.join();
}

double reduce_tiles(size_t n, const std::function<double(size_t, size_t)>& partial) {
  if (n == 0) return 0.0;
  const size_t ntiles = (n + kTile - 1) / kTile;
  std::vector<double> parts(ntiles);
  for_tiles(n, [&](size_t t, size_t b, size_t e) { parts[t] = partial(b, e); });
  double acc = 0.0;
  for (double p : parts) acc += p;
  return acc;
}

}  // namespace nsf::threads
