#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weylfan {

// Runs body(i) for i in [0, count) on a few worker threads.  Each index is
// handled exactly once; callers keep results deterministic by writing only
// to slot i.  The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body&& body, unsigned thread_count = 0) {
  if (count == 0) return;
  if (thread_count == 0) thread_count = std::thread::hardware_concurrency();
  if (thread_count < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  thread_count = static_cast<unsigned>(
      std::min<std::size_t>(thread_count, count));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace weylfan
