#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ccg {

// Static-chunk parallel loop. Results must be written to per-index slots by
// the body, which keeps output independent of the number of workers.
template <typename Body>
void parallel_for(int64_t count, int jobs, Body body) {
  if (jobs <= 1 || count < 2) {
    for (int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  const int workers = static_cast<int>(std::min<int64_t>(jobs, count));
  std::atomic<int64_t> next{0};
  const int64_t chunk = std::max<int64_t>(1, count / (8 * workers));
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int64_t begin = next.fetch_add(chunk);
        if (begin >= count) return;
        const int64_t end = std::min(count, begin + chunk);
        try {
          for (int64_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ccg
