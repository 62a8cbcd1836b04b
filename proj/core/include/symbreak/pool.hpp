#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace symbreak {

// Worker count: SYMBREAK_THREADS when set, hardware concurrency otherwise.
inline int default_thread_count() {
  if (const char* env = std::getenv("SYMBREAK_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= 256) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count) on a fixed pool. Results must be written to
// index i by the caller so output order stays canonical regardless of
// scheduling. The first exception is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 0) threads = default_thread_count();
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> workers;
  auto body = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  const std::size_t worker_count = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t t = 0; t < worker_count; ++t) workers.emplace_back(body);
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace symbreak
