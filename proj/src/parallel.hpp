#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace grs::detail {

inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Calls fn(chunk_index, lo, hi) over a fixed partition of [begin, end).
// The partition depends only on the range and chunk count, so callers that
// merge per-chunk results in chunk order get deterministic output.
template <class Fn>
void parallel_chunks(std::int64_t begin, std::int64_t end, std::int64_t chunks, Fn&& fn) {
  if (end <= begin) return;
  chunks = std::max<std::int64_t>(1, std::min<std::int64_t>(chunks, end - begin));
  const std::int64_t span = end - begin;
  auto bound = [&](std::int64_t c) { return begin + span / chunks * c + std::min(c, span % chunks); };
  if (chunks == 1) {
    fn(std::int64_t{0}, begin, end);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
  std::vector<std::thread> pool;
  const std::int64_t nthreads = std::min<std::int64_t>(chunks, worker_count());
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (std::int64_t w = 0; w < nthreads; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t c = w; c < chunks; c += nthreads) {
        try {
          fn(c, bound(c), bound(c + 1));
        } catch (...) {
          errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace grs::detail
