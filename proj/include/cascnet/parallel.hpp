#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cascnet {

// Runs fn(0) .. fn(count-1) on up to `workers` threads. Each index is
// processed exactly once; fn must only write to state owned by its index,
// which makes results independent of the worker count. The first exception
// thrown by any task is rethrown on the calling thread.
inline void parallel_for(int workers, size_t count,
                         const std::function<void(size_t)>& fn) {
  if (count == 0) return;
  const size_t nthreads =
      std::min<size_t>(count, static_cast<size_t>(workers < 1 ? 1 : workers));
  if (nthreads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cascnet
