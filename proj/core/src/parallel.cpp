#include "kdecoreset/parallel.hpp"

#include <algorithm>

namespace kdecoreset {

namespace {
std::atomic<int> g_workers{1};
}

int worker_threads() { return g_workers.load(std::memory_order_relaxed); }

void set_worker_threads(int n) { g_workers.store(std::max(1, n), std::memory_order_relaxed); }

namespace detail {

void run_chunks(std::size_t chunk_count, const std::function<void(std::size_t)>& body) {
  const int workers = std::min<std::size_t>(worker_threads(), chunk_count);
  if (workers <= 1) {
    for (std::size_t ci = 0; ci < chunk_count; ++ci) body(ci);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t ci = next.fetch_add(1, std::memory_order_relaxed);
      if (ci >= chunk_count) return;
      body(ci);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
}

}  // namespace detail
}  // namespace kdecoreset
