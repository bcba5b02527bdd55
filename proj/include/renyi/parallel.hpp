#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace renyi {

// Worker count: hardware concurrency capped by the RENYI_LAB_THREADS
// environment variable when it is set.
inline int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* cap = std::getenv("RENYI_LAB_THREADS")) {
    const int c = std::atoi(cap);
    if (c >= 1 && c < n) n = c;
    if (c >= 1 && n < 1) n = c;
  }
  return n;
}

// Runs body(i) for i in [0, n). Results must not depend on evaluation order;
// callers derive per-index seeds for that. The first exception thrown by any
// worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(long n, Body&& body) {
  const int workers = worker_count();
  if (n <= 0) return;
  if (workers == 1 || n < 64) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }

  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const long chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi]() {
      try {
        for (long i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace renyi
