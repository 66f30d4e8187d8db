#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace msemi {

/// Number of worker threads used by parallel_for; 0 means hardware concurrency.
inline std::size_t& parallel_worker_override() {
  static std::size_t workers = 0;
  return workers;
}

/// Runs fn(i) for i in [0, count) on a small thread pool. Callers write results
/// into slot i and reduce afterwards in index order, so the outcome does not
/// depend on the schedule. The first exception thrown by any task is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  std::size_t workers = parallel_worker_override();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace msemi
