#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ordersum {

/// Runs body(i) for i in [0, count) on up to `workers` threads. The first
/// exception thrown by any body is rethrown after all workers join.
template<typename Body>
void parallel_for(std::size_t count, unsigned workers, Body &&body)
{
  workers = std::max(1u, workers);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count)
        return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next.store(count);
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    auto n = std::min<std::size_t>(workers, count);
    for (std::size_t t = 0; t < n; ++t)
      pool.emplace_back(run);
  }

  if (failure)
    std::rethrow_exception(failure);
}

} // namespace ordersum
