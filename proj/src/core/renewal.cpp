/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/renewal.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "core/counting.hpp"
#include "core/rng.hpp"

namespace sgnet {

BigRat s_pmf(long k) {
  if (k < 2) throw std::invalid_argument("S takes values k >= 2");
  return make_rat(count_T(k), pow3(static_cast<unsigned long>(k)));
}

BigRat s_pmf_partial_sum(long k_max) {
  if (k_max < 2) return BigRat(0);
  // Sigma (2^k - 2) 3^{K-k} over 3^K, accumulated in integers.
  BigInt num = 0;
  BigInt p2 = 2;  // 2^1
  for (long k = 2; k <= k_max; ++k) {
    num *= 3;
    p2 *= 2;
    num += p2 - 2;
  }
  return make_rat(num, pow3(static_cast<unsigned long>(k_max)));
}

BigRat s_mean_partial_sum(long k_max) {
  if (k_max < 2) return BigRat(0);
  BigInt num = 0;
  BigInt p2 = 2;
  for (long k = 2; k <= k_max; ++k) {
    num *= 3;
    p2 *= 2;
    num += k * (p2 - 2);
  }
  return make_rat(num, pow3(static_cast<unsigned long>(k_max)));
}

RenewalExact::RenewalExact(int t_max) : t_max_(t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  scaled_.assign(static_cast<std::size_t>(t_max) + 1, BigInt(0));
  // A_t = Sigma_{k=2..t} (2^k - 2)(3^{t-k} + A_{t-k}); with C_j = 3^j + A_j
  // the geometric kernel gives A_t = P_t - 2 Q_t where
  // P_t = 2 P_{t-1} + 4 C_{t-2} and Q_t = Q_{t-1} + C_{t-2}.
  BigInt p = 0, q = 0, pow3_back2 = 1;  // 3^{t-2} rolling
  for (int t = 2; t <= t_max; ++t) {
    const BigInt c = pow3_back2 + scaled_[static_cast<std::size_t>(t - 2)];
    p = 2 * p + 4 * c;
    q += c;
    scaled_[static_cast<std::size_t>(t)] = p - 2 * q;
    pow3_back2 *= 3;
  }
}

BigRat RenewalExact::ey(int t) const {
  if (t < 0 || t > t_max_) throw std::invalid_argument("t outside computed range");
  return make_rat(scaled_[static_cast<std::size_t>(t)],
                  pow3(static_cast<unsigned long>(t)));
}

BigRat RenewalExact::ey_over_t(int t) const {
  if (t < 1 || t > t_max_) throw std::invalid_argument("t outside computed range");
  return make_rat(scaled_[static_cast<std::size_t>(t)],
                  t * pow3(static_cast<unsigned long>(t)));
}

std::vector<int> renewal_scan(const std::vector<int>& letters) {
  for (int x : letters) {
    if (x < 1 || x > 3) throw std::invalid_argument("letters must be in 1..3");
  }
  std::vector<int> s_values;
  unsigned window = 1u << 0;  // letter set of the open block; starts at {x_0} = {1}
  int last_p = 0;
  for (int p = 1; p <= static_cast<int>(letters.size()); ++p) {
    window |= 1u << (letters[static_cast<std::size_t>(p - 1)] - 1);
    if (window == 0b111u) {
      s_values.push_back(p - last_p);
      last_p = p;
      window = 1u << (letters[static_cast<std::size_t>(p - 1)] - 1);
    }
  }
  return s_values;
}

namespace {

// 128-bit inverse-CDF thresholds: th[k] = floor(P(S <= k) * 2^128), computed
// from the exact partial sums. The table covers the tail down to the 2^-128
// resolution of the uniform draw.
constexpr long kCdfTableMax = 256;

const std::vector<unsigned __int128>& cdf_thresholds() {
  static std::vector<unsigned __int128> table = [] {
    std::vector<unsigned __int128> th(kCdfTableMax + 1, 0);
    BigInt num = 0;  // partial-sum numerator over 3^k
    BigInt p2 = 2;
    BigInt den = 3;  // 3^k, advanced inside the loop
    for (long k = 2; k <= kCdfTableMax; ++k) {
      den *= 3;
      num *= 3;
      p2 *= 2;
      num += p2 - 2;
      const BigInt scaled = (num << 128) / den;
      const BigInt hi = scaled >> 64;
      const BigInt lo = scaled - (hi << 64);
      th[static_cast<std::size_t>(k)] =
          (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
    }
    return th;
  }();
  return table;
}

long sample_s(StreamRng& rng) {
  const auto& th = cdf_thresholds();
  const unsigned __int128 u = rng.next_u128();
  for (long k = 2; k <= kCdfTableMax; ++k) {
    if (u < th[static_cast<std::size_t>(k)]) return k;
  }
  return kCdfTableMax;  // tail mass below the draw resolution
}

}  // namespace

const char* RenewalMc::csv_header() { return "t,estimate,std_err,samples,seed"; }

std::string RenewalMc::csv() const {
  std::ostringstream os;
  os << csv_header() << '\n'
     << t << ',' << format_double(estimate) << ',' << format_double(std_err)
     << ',' << samples << ',' << seed << '\n';
  return os.str();
}

RenewalMc renewal_mc(int t, std::int64_t samples, std::uint64_t seed) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    StreamRng rng(seed, static_cast<std::uint64_t>(i));
    long total = 0;
    std::uint64_t y = 0;
    while (true) {
      const long s = sample_s(rng);
      if (total + s > t) break;
      total += s;
      ++y;
    }
    sum += y;
    sum_sq += static_cast<unsigned __int128>(y) * y;
  }
  RenewalMc out;
  out.t = t;
  out.samples = samples;
  out.seed = seed;
  const double mean = static_cast<double>(sum) / static_cast<double>(samples);
  out.estimate = mean;
  if (samples > 1) {
    const double ss = static_cast<double>(sum_sq);
    const double var = (ss - static_cast<double>(samples) * mean * mean) /
                       static_cast<double>(samples - 1);
    out.std_err = var > 0 ? std::sqrt(var / static_cast<double>(samples)) : 0.0;
  }
  return out;
}

namespace {

SandwichReport sandwich_at(int t, const RenewalExact& series) {
  // Integer comparison over the common denominator 3^t:
  //   X = Sigma_{k=2}^{t-1} A_{t-k} T(k),  Y = sum_omega(t) - e(t),
  // holds iff X <= Y <= X + 2*3^t.
  BigInt x = 0;
  for (int k = 2; k <= t - 1; ++k) {
    x += series.scaled(t - k) * count_T(k);
  }
  const BigInt p3 = pow3(static_cast<unsigned long>(t));
  const BigInt y = sum_omega(t) - count_e(t);
  SandwichReport rep;
  rep.t = t;
  rep.holds = (x <= y) && (y <= x + 2 * p3);
  rep.lower = make_rat(x, p3);
  rep.mid = make_rat(y, p3);
  rep.a_over_t = make_rat(x, t * p3);
  rep.b_over_t = make_rat(sum_omega(t), t * p3);
  return rep;
}

}  // namespace

SandwichReport lemma6_sandwich(int t) {
  if (t < 3) throw std::invalid_argument("t must be >= 3");
  const RenewalExact series(t - 2);
  return sandwich_at(t, series);
}

std::vector<SandwichReport> lemma6_sandwich_range(int t_min, int t_max) {
  if (t_min < 3 || t_max < t_min) throw std::invalid_argument("need 3 <= t_min <= t_max");
  const RenewalExact series(t_max - 2);
  std::vector<SandwichReport> out;
  out.reserve(static_cast<std::size_t>(t_max - t_min + 1));
  for (int t = t_min; t <= t_max; ++t) out.push_back(sandwich_at(t, series));
  return out;
}

}  // namespace sgnet
