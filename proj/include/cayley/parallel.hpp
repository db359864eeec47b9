#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "cayley/random.hpp"

namespace cayley {

/// Runs fn(replicate, rng) for replicate in [0, count) across `jobs` threads.
///
/// Every replicate gets master.child(replicate) and results are written by
/// index, so the output never depends on the job count.
template <typename Result, typename Fn>
std::vector<Result> run_replicates(std::size_t count, std::uint64_t seed, unsigned jobs, Fn&& fn) {
  std::vector<Result> results(count);
  const RandomSource master(seed);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      RandomSource rng = master.child(r);
      results[r] = fn(r, rng);
    }
  };

  if (jobs == 1) {
    work(0, count);
    return results;
  }

  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::size_t chunk = (count + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t begin = j * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace cayley
