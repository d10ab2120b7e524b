#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fdanova::detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) split statically across workers.
/// Callers must make iteration i independent of every other iteration and
/// combine results through order-independent reductions (integer counts,
/// index-addressed writes), so the outcome never depends on `threads`.
inline void parallel_for(std::int64_t count, int threads,
                         const std::function<void(std::int64_t)>& fn) {
  const int workers = std::min<std::int64_t>(resolve_threads(threads), count);
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min<std::int64_t>(lo + chunk, count);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace fdanova::detail
