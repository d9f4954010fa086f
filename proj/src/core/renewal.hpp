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

#include "core/numeric.hpp"

namespace sgnet {

// Law of the letter count needed to see a third distinct letter in the
// right-to-left scan: P(S = k) = (2^k - 2)/3^k for k >= 2.
BigRat s_pmf(long k);
BigRat s_pmf_partial_sum(long k_max);   // Sigma_{k=2..k_max} P(S = k) -> 1
BigRat s_mean_partial_sum(long k_max);  // Sigma k P(S = k) -> 9/2

// Exact renewal expectations. E(Y_t) satisfies
//   E(Y_t) = Sigma_{k=2..t} P(S = k) (1 + E(Y_{t-k})),  E(Y_0) = E(Y_1) = 0;
// scaled by 3^t the recursion is integer-valued, and the geometric kernel
// 2^k - 2 lets each step reuse two running accumulators, so the whole series
// is exact with no floating-point fallback at any t.
class RenewalExact {
 public:
  explicit RenewalExact(int t_max);
  int t_max() const { return t_max_; }
  const BigInt& scaled(int t) const { return scaled_[static_cast<std::size_t>(t)]; }
  BigRat ey(int t) const;         // E(Y_t)
  BigRat ey_over_t(int t) const;  // E(Y_t)/t, t >= 1

 private:
  int t_max_;
  std::vector<BigInt> scaled_;  // E(Y_t) * 3^t
};

// The paper's block scan over an explicit letter sequence x_1..x_t (with the
// virtual x_0 = 1): returns the inter-arrival lengths S_1, S_2, ... of the
// completed renewals. Y_t is the number of entries.
std::vector<int> renewal_scan(const std::vector<int>& letters);

struct RenewalMc {
  int t = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double estimate = 0;
  double std_err = 0;

  static const char* csv_header();  // t,estimate,std_err,samples,seed
  std::string csv() const;
};

// Monte Carlo E(Y_t): i.i.d. S drawn by 128-bit inverse CDF over exact
// partial sums; sample streams are keyed by index, so the result depends
// only on (t, samples, seed).
RenewalMc renewal_mc(int t, std::int64_t samples, std::uint64_t seed);

// Exact check of the renewal sandwich from the proof of the alpha* limit:
//   A(t) <= B(t) - e(t)/3^t <= A(t) + 2
// with A(t) = Sigma_{k=2}^{t-1} E(Y_{t-k}) T(k)/3^k and B(t) = sum_omega(t)/3^t.
struct SandwichReport {
  int t = 0;
  bool holds = false;
  BigRat lower;      // A(t)
  BigRat mid;        // B(t) - e(t)/3^t
  BigRat a_over_t;   // A(t)/t
  BigRat b_over_t;   // B(t)/t
};

SandwichReport lemma6_sandwich(int t);  // t >= 3
// Batch variant sharing one exact series across t = t_min..t_max.
std::vector<SandwichReport> lemma6_sandwich_range(int t_min, int t_max);

}  // namespace sgnet
