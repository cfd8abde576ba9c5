#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmt {

// Runs body(r) once for every replicate index in [0, replicates), partitioned
// contiguously across threads.  Results must be written to per-replicate
// slots; with that discipline the outcome is independent of the thread count.
// The first exception thrown by any worker is rethrown on the caller.
template <typename Body>
void for_each_replicate(std::uint64_t replicates, int threads, Body&& body) {
  if (replicates == 0) return;
  if (threads < 1) threads = 1;
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), replicates);
  if (workers == 1) {
    for (std::uint64_t r = 0; r < replicates; ++r) body(r);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (replicates + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(replicates, begin + chunk);
    pool.emplace_back([&, begin, end] {
      try {
        for (std::uint64_t r = begin; r < end; ++r) body(r);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rmt
