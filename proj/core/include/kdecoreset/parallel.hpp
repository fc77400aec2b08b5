#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace kdecoreset {

// Data-parallel scans with deterministic results.  Work is split into
// fixed-size chunks whose boundaries depend only on the input size; each
// chunk is reduced sequentially, and chunk results are combined in chunk
// order.  The outcome is therefore bitwise identical at any thread count.

int worker_threads();
void set_worker_threads(int n);

namespace detail {
void run_chunks(std::size_t chunk_count, const std::function<void(std::size_t)>& body);
}

inline constexpr std::size_t kDefaultChunk = 2048;

// chunk_fn(begin, end) -> R; combine(acc, chunk_result) -> R, applied in
// chunk index order starting from init.
template <class R, class ChunkFn, class CombineFn>
R chunked_reduce(std::size_t count, R init, ChunkFn chunk_fn, CombineFn combine,
                 std::size_t chunk_size = kDefaultChunk) {
  if (count == 0) return init;
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<R> partial(chunks, init);
  detail::run_chunks(chunks, [&](std::size_t ci) {
    const std::size_t b = ci * chunk_size;
    const std::size_t e = b + chunk_size < count ? b + chunk_size : count;
    partial[ci] = chunk_fn(b, e);
  });
  R acc = init;
  for (std::size_t ci = 0; ci < chunks; ++ci) acc = combine(acc, partial[ci]);
  return acc;
}

}  // namespace kdecoreset
