#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace stripcalc {

/// Worker count for sweep loops. The STRIPCALC_THREADS environment variable
/// caps it; values below 1 are ignored.
inline int thread_budget() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("STRIPCALC_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

/// Runs f(i) for i in [0, n). Iterations must be independent; the partition
/// into chunks is deterministic so results never depend on scheduling.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& f) {
  if (n <= 0) return;
  const int workers = thread_budget();
  if (workers == 1 || n == 1) {
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::ptrdiff_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::ptrdiff_t lo = w * chunk;
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &f] {
      for (std::ptrdiff_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace stripcalc
