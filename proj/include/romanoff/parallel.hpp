#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace romanoff {

namespace detail {
inline std::atomic<unsigned> g_threads{1};
}

// Worker count used by the compute modules; 0 selects hardware concurrency.
inline void set_thread_count(unsigned n) {
  if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
  detail::g_threads.store(n);
}

inline unsigned thread_count() { return detail::g_threads.load(); }

// Runs body(begin, end, chunk_index) over contiguous chunks of [0, count).
// Chunk boundaries depend only on count and the thread count, so callers that
// merge per-chunk results in chunk order get deterministic output.
template <typename Body>
void parallel_chunks(std::size_t count, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  const std::size_t step = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::size_t chunk_count(std::size_t count) {
  return std::min<std::size_t>(thread_count(), std::max<std::size_t>(count, 1));
}

}  // namespace romanoff
