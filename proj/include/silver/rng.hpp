#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace silver {

// Name of the shuffle scheme, recorded in output metadata. Bump the suffix
// if the draw procedure ever changes, so old training sets stay reproducible.
inline constexpr const char* kShuffleGenerator = "fisher-yates-mt19937_64-v1";

// Unbiased draw in [0, n). std::uniform_int_distribution is not portable
// across standard libraries, so bounded draws are done by rejection here.
inline uint64_t bounded_draw(std::mt19937_64& rng, uint64_t n) {
  if (n <= 1) return 0;
  const uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

template <typename T>
void deterministic_shuffle(std::vector<T>& items, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(bounded_draw(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace silver
