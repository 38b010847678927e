#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wildclust {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception (by
// index) is rethrown after all workers finish.
template <class Fn>
void parallel_for(size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errs(n);
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  size_t t = std::min<size_t>(static_cast<size_t>(jobs), n);
  for (size_t k = 0; k < t; ++k) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace wildclust
