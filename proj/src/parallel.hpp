#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ivt::detail {

// Runs body(k) for k in [0, count) on up to `threads` workers. Each k is
// handled exactly once; the first exception in index order is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        body(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(worker);
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace ivt::detail
