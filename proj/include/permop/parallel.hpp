#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace permop {

/// Worker count: PERMOP_THREADS if set and positive, else 1.
inline int default_threads() {
  if (const char* s = std::getenv("PERMOP_THREADS")) {
    try {
      int t = std::stoi(s);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline int& thread_budget() {
  static int t = default_threads();
  return t;
}

/// Runs fn(i) for i in [0, n).  Callers write to slot i only, so the result
/// does not depend on the schedule.  The first exception is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& fn, int threads = thread_budget()) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace permop
