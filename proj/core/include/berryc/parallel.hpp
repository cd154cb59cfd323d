#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace berryc {

/// Run fn(i) for i in [0, count) across up to `workers` threads. Work items
/// must be independent; results should be written to preallocated slots so
/// gathering stays in input order.
template <typename F>
void parallel_for(std::size_t count, unsigned workers, F&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < count; i += n) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace berryc
