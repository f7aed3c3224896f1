#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace minorlab {

// Worker count: MINORLAB_JOBS beats the request, 0 means all cores.
inline int resolve_jobs(int requested) {
  if (const char* env = std::getenv("MINORLAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(chunk) for every chunk on a small pool.  Callers keep results in
// per-chunk slots, so output never depends on scheduling.
inline void parallel_chunks(int nchunks, int jobs, const std::function<void(int)>& fn) {
  if (nchunks <= 0) return;
  jobs = std::max(1, std::min(jobs, nchunks));
  if (jobs == 1) {
    for (int c = 0; c < nchunks; ++c) fn(c);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int i = 0; i < jobs; ++i)
    pool.emplace_back([&] {
      for (;;) {
        int c = next.fetch_add(1);
        if (c >= nchunks) return;
        try {
          fn(c);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace minorlab
