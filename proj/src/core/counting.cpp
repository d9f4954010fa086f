/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/counting.hpp"

#include <mutex>
#include <stdexcept>

#include "core/word.hpp"

namespace sgnet {

BigInt count_T(long k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return pow2(static_cast<unsigned long>(k)) - 2;
}

BigInt count_h(long k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return pow2(static_cast<unsigned long>(k)) - 1;
}

BigInt count_M(long k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return pow2(static_cast<unsigned long>(k - 1)) - 1;
}

BigInt count_e(long k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return 3 * pow2(static_cast<unsigned long>(k)) - 3;
}

BigInt W_count(std::span<const std::int64_t> parts) {
  if (parts.empty()) throw std::invalid_argument("empty composition");
  for (std::int64_t k : parts) {
    if (k < 1) throw std::invalid_argument("composition parts must be >= 1");
  }
  BigInt w = 3 * count_h(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) w *= count_T(parts[i]);
  return w;
}

namespace {

// One step of the block convolution, evaluated incrementally.
//
//   G(s)  total T-weight of non-leading block tails of total length s
//   D(s)  G(s) plus the block-count-weighted total (so a leading block of
//         length k contributes e(k) D(t-k) to Sigma omega)
//
// G(s) = Sigma_{k>=2} T(k) G(s-k) with T(k) = 2^k - 2, so G is carried by
// the running pairs (PG, QG) with PG(s) = 2 PG(s-1) + 4 G(s-2) and
// QG(s) = QG(s-1) + G(s-2); similarly for the other three convolutions.
class SeriesCursor {
 public:
  SeriesCursor() {
    // t = 0: empty word; G(0) = D(0) = 1.
    g_back2_ = 0;  // unused until t = 2
    g_back1_ = 1;
    d_back2_ = 0;
    d_back1_ = 1;
    pow3_ = 1;
  }

  // Advances to the next t (first call reaches t = 1).
  void advance() {
    ++t_;
    pow3_ *= 3;
    // leading-block convolutions use values through t-1
    ps_geo_ = 2 * ps_geo_ + 2 * d_back1_;
    ps_lin_ += d_back1_;
    pc_geo_ = 2 * pc_geo_ + 2 * g_back1_;
    pc_lin_ += g_back1_;
    sum_omega_ = 3 * (ps_geo_ - ps_lin_);
    comp_total_ = 3 * (pc_geo_ - pc_lin_);
    alpha_prefix_ += sum_omega_ - pow3_;
    // tail convolutions use values through t-2
    BigInt g, d;
    if (t_ >= 2) {
      pg_geo_ = 2 * pg_geo_ + 4 * g_back2_;
      pg_lin_ += g_back2_;
      g = pg_geo_ - 2 * pg_lin_;
      pd_geo_ = 2 * pd_geo_ + 4 * d_back2_;
      pd_lin_ += d_back2_;
      d = g + pd_geo_ - 2 * pd_lin_;
    } else {
      g = 0;  // G(1) = D(1) = 0
      d = 0;
    }
    g_back2_ = std::move(g_back1_);
    g_back1_ = std::move(g);
    d_back2_ = std::move(d_back1_);
    d_back1_ = std::move(d);
  }

  int t() const { return t_; }
  const BigInt& sum_omega() const { return sum_omega_; }
  const BigInt& comp_total() const { return comp_total_; }
  const BigInt& pow3() const { return pow3_; }
  const BigInt& alpha_prefix() const { return alpha_prefix_; }

 private:
  int t_ = 0;
  BigInt g_back2_, g_back1_;  // G(t-2), G(t-1) after advance()
  BigInt d_back2_, d_back1_;
  BigInt pg_geo_, pg_lin_, pd_geo_, pd_lin_;
  BigInt ps_geo_, ps_lin_, pc_geo_, pc_lin_;
  BigInt pow3_, sum_omega_, comp_total_, alpha_prefix_;
};

// Small-t cache so table/series lookups do not re-run the cursor.
constexpr int kCacheLimit = 4096;

struct SeriesCache {
  std::mutex mutex;
  std::vector<BigInt> sum_omega{BigInt(0)};     // index t
  std::vector<BigInt> comp_total{BigInt(1)};
  std::vector<BigInt> pow3{BigInt(1)};
  std::vector<BigInt> alpha_prefix{BigInt(0)};
  SeriesCursor cursor;

  void grow(int need) {
    while (cursor.t() < need) {
      cursor.advance();
      sum_omega.push_back(cursor.sum_omega());
      comp_total.push_back(cursor.comp_total());
      pow3.push_back(cursor.pow3());
      alpha_prefix.push_back(cursor.alpha_prefix());
    }
  }
};

SeriesCache& cache() {
  static SeriesCache c;
  return c;
}

struct SeriesValues {
  BigInt sum_omega, comp_total, pow3, alpha_prefix;
};

SeriesValues series_at(int t) {
  if (t <= kCacheLimit) {
    SeriesCache& c = cache();
    const std::lock_guard<std::mutex> lock(c.mutex);
    c.grow(t);
    return {c.sum_omega[static_cast<std::size_t>(t)],
            c.comp_total[static_cast<std::size_t>(t)],
            c.pow3[static_cast<std::size_t>(t)],
            c.alpha_prefix[static_cast<std::size_t>(t)]};
  }
  SeriesCursor cursor;
  while (cursor.t() < t) cursor.advance();
  return {cursor.sum_omega(), cursor.comp_total(), cursor.pow3(),
          cursor.alpha_prefix()};
}

}  // namespace

BigInt sum_omega(int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  return series_at(t).sum_omega;
}

BigInt composition_weight_total(int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  return series_at(t).comp_total;
}

BigRat alpha_bar(int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (t == 0) return BigRat(0);
  const SeriesValues v = series_at(t);
  return make_rat(v.sum_omega - v.pow3, v.pow3);
}

BigRat kappa(int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (t == 0) return BigRat(0);
  const SeriesValues v = series_at(t);
  // #V_t = (3^{t+1} - 1) / 2
  return make_rat(2 * v.alpha_prefix, 3 * v.pow3 - 1);
}

BigRat chi(int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  BigInt weighted = 0, total = 1, p = 1;  // k = 0 term of the total
  for (int k = 1; k <= t; ++k) {
    p *= 3;
    weighted += k * p;
    total += p;
  }
  return make_rat(weighted, t * total);
}

void scan_alpha_series(
    int t_max, const std::function<void(int, const BigInt&, const BigInt&,
                                        const BigInt&)>& fn) {
  SeriesCursor cursor;
  while (cursor.t() < t_max) {
    cursor.advance();
    fn(cursor.t(), cursor.sum_omega(), cursor.pow3(), cursor.alpha_prefix());
  }
}

CountingTable counting_table(int up_to) {
  if (up_to < 1) throw std::invalid_argument("up_to must be >= 1");
  CountingTable tab;
  tab.up_to = up_to;
  tab.T.resize(static_cast<std::size_t>(up_to) + 1);
  tab.h.resize(static_cast<std::size_t>(up_to) + 1);
  tab.M.resize(static_cast<std::size_t>(up_to) + 1);
  tab.e.resize(static_cast<std::size_t>(up_to) + 1);
  tab.sum_omega.resize(static_cast<std::size_t>(up_to) + 1);
  for (int k = 1; k <= up_to; ++k) {
    tab.T[static_cast<std::size_t>(k)] = count_T(k);
    tab.h[static_cast<std::size_t>(k)] = count_h(k);
    tab.M[static_cast<std::size_t>(k)] = count_M(k);
    tab.e[static_cast<std::size_t>(k)] = count_e(k);
    tab.sum_omega[static_cast<std::size_t>(k)] = sum_omega(k);
  }
  return tab;
}

BigInt sum_omega_enumerated(int t) {
  if (t < 1 || t > 14) throw std::invalid_argument("enumeration oracle limited to 1 <= t <= 14");
  std::string w(static_cast<std::size_t>(t), '1');
  unsigned long total = 0;
  while (true) {
    total += omega_str(w);
    int i = t - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == '3') {
      w[static_cast<std::size_t>(i)] = '1';
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return BigInt(total);
}

}  // namespace sgnet
