#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace optsample {

/// Environment variable that caps worker threads (default: hardware concurrency).
inline constexpr const char* kThreadsEnv = "OPTSAMPLE_THREADS";

inline int default_thread_count() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/**
 * Runs body(i) for i in [0, count) on up to `threads` workers (0 = default_thread_count()).
 * Indices are claimed statically in strides, each writes only its own slot, so results
 * are independent of the thread count. The first exception (lowest index) is rethrown.
 */
template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  if (threads <= 0) threads = default_thread_count();
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace optsample
