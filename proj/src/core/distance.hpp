/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/network.hpp"
#include "core/numeric.hpp"

namespace sgnet {

// Default cap for exact all-pairs aggregation (one BFS per vertex).
inline constexpr int kDefaultExactAplCap = 8;

// Reusable BFS workspace (distance bytes + queue). Diameters here are at
// most 2t, far below the 0xFF sentinel.
class BfsScratch {
 public:
  explicit BfsScratch(std::uint64_t n) : dist_(n), queue_(n) {}
  // Full single-source sweep; the returned view is valid until the next run.
  const std::vector<std::uint8_t>& run(const Network& net, std::uint32_t source);
  // Early-exit variant.
  std::uint32_t run_to(const Network& net, std::uint32_t source, std::uint32_t target);

 private:
  std::vector<std::uint8_t> dist_;
  std::vector<std::uint32_t> queue_;
};

// Geodesic distance between two words of V_t. Throws OutOfRange when either
// word is not in V_t.
std::uint32_t bfs_distance(const Network& net, const Word& from, const Word& to);

// d_t(w, root) = omega(w) for every t >= |w|; no graph needed.
std::uint64_t distance_to_root(const Word& w);

// Exact all-pairs aggregates over unordered vertex pairs:
//   pi     all pairs of distinct vertices
//   lambda pairs involving the root
//   mu     pairs of nonempty words sharing the first letter
//   nu     pairs of nonempty words with different first letters
// pi = mu + lambda + nu and mu = 3 pi(t-1) hold exactly and are verified in
// the test suite rather than assumed.
struct DistanceSummary {
  int t = 0;
  std::uint64_t n_vertices = 0;
  BigInt pi, lambda, mu, nu;
  BigRat apl;  // pi / (N(N-1)/2)

  static const char* csv_header();
  std::string csv() const;  // header line + one data row
};

// One BFS per source, distributed over a worker pool; aggregation is
// order-independent integer summation, so the result is identical for any
// thread count. Throws CapExceeded above max_exact_t (use sampling instead)
// and std::invalid_argument when there are no pairs (t = 0).
DistanceSummary all_pairs_summary(const Network& net, int threads = 0,
                                  int max_exact_t = kDefaultExactAplCap);

struct SampledApl {
  int t = 0;
  double estimate = 0;
  double std_err = 0;
  std::uint64_t pairs = 0;
  std::uint64_t seed = 0;

  static const char* csv_header();
  std::string csv() const;
};

// Unbiased estimator of the average path length from uniformly sampled
// distinct unordered pairs; deterministic per (seed, pairs).
SampledApl sampled_apl(const Network& net, std::uint64_t pairs, std::uint64_t seed);

}  // namespace sgnet
