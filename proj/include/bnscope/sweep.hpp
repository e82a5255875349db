#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace bnscope {

/// Worker cap used by every state-space sweep. Defaults to the value of
/// BNSCOPE_THREADS when set, otherwise 1.
int thread_count();
void set_thread_count(int threads);

/// Splits [0, total) into contiguous ranges, runs `work(begin, end)` on each
/// range (possibly concurrently) and returns the per-range results in range
/// order, so callers can merge deterministically.
template <typename Result, typename Work>
std::vector<Result> sweep_ranges(std::uint64_t total, Work&& work) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, thread_count()));
  // Small sweeps never pay for threads.
  const std::uint64_t chunks = total < 4096 ? 1 : std::min<std::uint64_t>(workers, total);
  std::vector<Result> results(static_cast<std::size_t>(chunks));
  const std::uint64_t step = (total + chunks - 1) / std::max<std::uint64_t>(chunks, 1);
  if (chunks <= 1) {
    if (!results.empty()) results[0] = work(std::uint64_t{0}, total);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = c * step;
    const std::uint64_t end = std::min(total, begin + step);
    pool.emplace_back([&results, &work, c, begin, end] {
      results[static_cast<std::size_t>(c)] = work(begin, end);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace bnscope
