#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mtcforge {

// Resolves a requested job count; 0 means one per hardware thread.
inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count) and returns the per-index results in index
// order, so any reduction over the result is independent of the job count.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Result> out(count);
  const unsigned workers = std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = count;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            out[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            // keep the lowest failing index so the rethrown error is reproducible
            if (i < failure_index) {
              failure_index = i;
              failure = std::current_exception();
            }
          }
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace mtcforge
