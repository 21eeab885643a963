#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace relipoly {

/// Worker count: the explicit request, else RELIPOLY_THREADS, else the
/// hardware concurrency. Always at least 1.
int resolve_threads(std::optional<int> requested = std::nullopt);

/// Runs task(i) for i in [0, tasks) on up to `threads` workers. Tasks are
/// handed out dynamically, so callers must make each task's result
/// independent of which worker ran it. The first exception is rethrown.
template <class Task>
void parallel_for(int tasks, int threads, Task&& task) {
  if (threads <= 1 || tasks <= 1) {
    for (int i = 0; i < tasks; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < tasks; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks;
      }
    }
  };
  std::vector<std::jthread> pool;
  const int n = std::min(threads, tasks);
  pool.reserve(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace relipoly
