/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace sgnet {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(worker, begin, end) over contiguous chunks of [0, n). The chunking
// depends only on (n, threads), never on scheduling.
template <class Fn>
void parallel_chunks(std::uint64_t n, int threads, Fn&& fn) {
  const int k = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(n, 1));
  if (k <= 1) {
    fn(0, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(k));
  const std::uint64_t chunk = (n + k - 1) / k;
  for (int w = 0; w < k; ++w) {
    const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
    const std::uint64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace sgnet
