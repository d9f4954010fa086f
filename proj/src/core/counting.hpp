/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/numeric.hpp"

namespace sgnet {

// Closed-form block counts for the normal decomposition, k >= 1. The
// degenerate values T(1) = M(1) = 0 encode the minimum block length two for
// non-leading blocks without special cases.
BigInt count_T(long k);  // 2^k - 2: length-k words over a fixed two-letter set using both
BigInt count_h(long k);  // 2^k - 1: length-k words, <= 2 distinct letters, fixed last letter
BigInt count_M(long k);  // 2^{k-1} - 1: as T but with the last letter fixed
BigInt count_e(long k);  // 3 2^k - 3: length-k words with omega = 1

struct CountingTable {
  int up_to = 0;
  // index k (entry 0 unused)
  std::vector<BigInt> T, h, M, e;
  // index t; sum over all words of length t of omega
  std::vector<BigInt> sum_omega;
};
CountingTable counting_table(int up_to);

// Number of length-(sum k_i) words whose normal decomposition has block
// lengths exactly (k_1, ..., k_l): 3 h(k_1) T(k_2) ... T(k_l). Compositions
// with a later part equal to 1 count zero words via T(1) = 0. Throws
// std::invalid_argument on an empty composition or parts < 1.
BigInt W_count(std::span<const std::int64_t> parts);

// Sigma over |sigma| = t of omega(sigma), t >= 1. Evaluated through the
// length-indexed block convolution; T(k) = 2^k - 2 and e(k) = 3 2^k - 3 are
// differences of geometric kernels, so the convolution is maintained with
// running accumulators (two per kernel) instead of a quadratic inner loop.
BigInt sum_omega(int t);

// Sigma of W_count over all compositions of t; equals 3^t.
BigInt composition_weight_total(int t);

// Average of L over words of length t: sum_omega(t)/3^t - 1; zero at t = 0.
BigRat alpha_bar(int t);

// Weighted average Sigma alpha_k 3^k / Sigma 3^k over k <= t.
BigRat kappa(int t);

// Sigma k 3^k / (t Sigma 3^k), t >= 1; at most 1, tends to 1.
BigRat chi(int t);

// Streams t = 1..t_max of the series in O(1) memory:
//   fn(t, sum_omega_t, pow3_t, alpha_num_prefix_t)
// where alpha_num_prefix_t = Sigma_{k<=t} (sum_omega(k) - 3^k), the numerator
// of kappa_t over #V_t.
void scan_alpha_series(
    int t_max, const std::function<void(int, const BigInt&, const BigInt&,
                                        const BigInt&)>& fn);

// Exhaustive oracle: Sigma omega over all 3^t words. t <= 14.
BigInt sum_omega_enumerated(int t);

}  // namespace sgnet
