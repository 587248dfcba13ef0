#pragma once

// Exhaustive searches split across worker threads with a schedule-independent
// result: the witness reported is always the one with the lowest task index.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hfm {

// HFM_THREADS if set, else the hardware concurrency (at least 1).
int worker_count();

// Runs task(i) for i in [0, n) and returns the value produced by the smallest i
// whose task returned one. Tasks above the best index found so far are skipped.
// An exception thrown by a task is rethrown if no lower index produced a value.
template <class T, class Task>
std::optional<T> first_witness(std::size_t n, Task&& task) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::mutex mu;
  std::optional<T> result;
  std::exception_ptr error;
  std::size_t error_index = n;

  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || i > best.load()) return;
      try {
        std::optional<T> r = task(i);
        if (!r) continue;
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          result = std::move(r);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        if (i < best.load()) best.store(i);
      }
    }
  };

  int threads = static_cast<int>(std::min<std::size_t>(worker_count(), n));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (error && error_index <= best.load()) std::rethrow_exception(error);
  return result;
}

}  // namespace hfm
