#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "spinpoly/errors.hpp"

namespace spinpoly {

/// Worker count: SPINPOLY_THREADS when set (positive integer), else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("SPINPOLY_THREADS")) {
    const std::string text(env);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || value <= 0) throw InputError("SPINPOLY_THREADS must be a positive integer");
    return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// results[i] = fn(i) for i in [0, count), computed on up to `workers` threads.
/// Output order is independent of scheduling; the first exception is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn, unsigned workers = thread_count()) {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace spinpoly
