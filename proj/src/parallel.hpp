#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace reachsym::detail {

/// Runs body(worker, begin, end) over [0, n) in chunks handed out
/// dynamically. Bodies must write only to per-index or per-worker state so
/// results do not depend on scheduling. The first exception is rethrown.
template <class Body>
void parallel_chunks(std::size_t n, unsigned threads, std::size_t chunk, Body&& body) {
  threads = std::max(1u, threads);
  chunk = std::max<std::size_t>(1, chunk);
  if (threads == 1 || n <= chunk) {
    body(0u, std::size_t{0}, n);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&](unsigned id) {
    try {
      while (true) {
        std::size_t begin = next.fetch_add(chunk);
        if (begin >= n) return;
        body(id, begin, std::min(n, begin + chunk));
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace reachsym::detail
