#pragma once

#include <algorithm>
#include <future>
#include <vector>

namespace silver {

// Fixed-size chunks processed possibly in parallel, results returned in
// chunk order. Chunk boundaries depend only on item count, never on the
// worker count, so downstream merges are bit-identical for any `workers`.
inline constexpr size_t kChunkSize = 256;

template <typename Fn>
auto map_chunks(size_t item_count, int workers, Fn&& fn)
    -> std::vector<decltype(fn(size_t{0}, size_t{0}))> {
  using Result = decltype(fn(size_t{0}, size_t{0}));
  const size_t chunks = (item_count + kChunkSize - 1) / kChunkSize;
  std::vector<Result> results(chunks);
  if (workers <= 1 || chunks <= 1) {
    for (size_t c = 0; c < chunks; ++c)
      results[c] = fn(c * kChunkSize, std::min(item_count, (c + 1) * kChunkSize));
    return results;
  }
  size_t next = 0;
  while (next < chunks) {
    size_t batch = std::min<size_t>(static_cast<size_t>(workers), chunks - next);
    std::vector<std::future<Result>> futures;
    futures.reserve(batch);
    for (size_t c = next; c < next + batch; ++c) {
      futures.push_back(std::async(std::launch::async, [&fn, c, item_count] {
        return fn(c * kChunkSize, std::min(item_count, (c + 1) * kChunkSize));
      }));
    }
    for (size_t k = 0; k < batch; ++k) results[next + k] = futures[k].get();
    next += batch;
  }
  return results;
}

}  // namespace silver
