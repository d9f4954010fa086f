/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/distance.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace sgnet {

const std::vector<std::uint8_t>& BfsScratch::run(const Network& net,
                                                 std::uint32_t source) {
  dist_.assign(dist_.size(), 0xFF);
  dist_[source] = 0;
  std::size_t head = 0, tail = 0;
  queue_[tail++] = source;
  while (head < tail) {
    const std::uint32_t v = queue_[head++];
    const std::uint8_t d = dist_[v];
    assert(d < 0xFE);
    for (std::uint32_t u : net.neighbors(v)) {
      if (dist_[u] == 0xFF) {
        dist_[u] = static_cast<std::uint8_t>(d + 1);
        queue_[tail++] = u;
      }
    }
  }
  return dist_;
}

std::uint32_t BfsScratch::run_to(const Network& net, std::uint32_t source,
                                 std::uint32_t target) {
  if (source == target) return 0;
  dist_.assign(dist_.size(), 0xFF);
  dist_[source] = 0;
  std::size_t head = 0, tail = 0;
  queue_[tail++] = source;
  while (head < tail) {
    const std::uint32_t v = queue_[head++];
    const std::uint8_t d = dist_[v];
    for (std::uint32_t u : net.neighbors(v)) {
      if (dist_[u] == 0xFF) {
        if (u == target) return d + 1u;
        dist_[u] = static_cast<std::uint8_t>(d + 1);
        queue_[tail++] = u;
      }
    }
  }
  throw std::logic_error("target unreachable; G_t is connected by construction");
}

namespace {

std::uint32_t checked_index(const Network& net, const Word& w) {
  if (static_cast<int>(w.size()) > net.t()) {
    throw OutOfRange("word \"" + w.cli_str() + "\" not in V_" +
                     std::to_string(net.t()));
  }
  return static_cast<std::uint32_t>(index_of(w));
}

// First letter per vertex (0 for the root), from index arithmetic.
std::vector<std::uint8_t> first_letters(const Network& net) {
  const std::uint64_t n = net.vertex_count();
  std::vector<std::uint8_t> first(n, 0);
  std::uint64_t base = 1, span = 3;
  while (base < n) {
    const std::uint64_t third = span / 3;
    for (std::uint64_t v = base; v < base + span && v < n; ++v) {
      first[v] = static_cast<std::uint8_t>(1 + (v - base) / third);
    }
    base += span;
    span *= 3;
  }
  return first;
}

}  // namespace

std::uint32_t bfs_distance(const Network& net, const Word& from, const Word& to) {
  const std::uint32_t a = checked_index(net, from);
  const std::uint32_t b = checked_index(net, to);
  BfsScratch scratch(net.vertex_count());
  return scratch.run_to(net, a, b);
}

std::uint64_t distance_to_root(const Word& w) { return omega(w); }

const char* DistanceSummary::csv_header() {
  return "t,pi,lambda,mu,nu,n_vertices,apl_exact_num,apl_exact_den,apl_decimal";
}

std::string DistanceSummary::csv() const {
  std::ostringstream os;
  os << csv_header() << '\n'
     << t << ',' << pi.get_str() << ',' << lambda.get_str() << ','
     << mu.get_str() << ',' << nu.get_str() << ',' << n_vertices << ','
     << apl.get_num().get_str() << ',' << apl.get_den().get_str() << ','
     << decimal_round_half_even(apl, 12) << '\n';
  return os.str();
}

DistanceSummary all_pairs_summary(const Network& net, int threads, int max_exact_t) {
  if (max_exact_t < 0) max_exact_t = kDefaultExactAplCap;
  if (net.t() > max_exact_t) {
    throw CapExceeded("exact all-pairs summary capped at t = " +
                      std::to_string(max_exact_t) +
                      "; use the sampled estimator for larger t");
  }
  const std::uint64_t n = net.vertex_count();
  if (n < 2) throw std::invalid_argument("t = 0 network has no vertex pairs");

  const std::vector<std::uint8_t> first = first_letters(net);

  // Ordered sums; every unordered pair is seen from both endpoints.
  BigInt lambda2 = 0, mu2 = 0, nu2 = 0;
  std::mutex merge_mutex;
  parallel_chunks(n, threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    BfsScratch scratch(n);
    unsigned __int128 lam = 0, mu = 0, nu = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      const auto& dist = scratch.run(net, static_cast<std::uint32_t>(s));
      const std::uint8_t fs = first[s];
      for (std::uint64_t v = 0; v < n; ++v) {
        if (v == s) continue;
        const std::uint8_t d = dist[v];
        if (fs == 0 || first[v] == 0) {
          lam += d;
        } else if (fs == first[v]) {
          mu += d;
        } else {
          nu += d;
        }
      }
    }
    const std::lock_guard<std::mutex> lock(merge_mutex);
    lambda2 += bigint_from_u128(lam);
    mu2 += bigint_from_u128(mu);
    nu2 += bigint_from_u128(nu);
  });

  DistanceSummary summary;
  summary.t = net.t();
  summary.n_vertices = n;
  summary.lambda = lambda2 / 2;
  summary.mu = mu2 / 2;
  summary.nu = nu2 / 2;
  summary.pi = summary.lambda + summary.mu + summary.nu;
  const BigInt pairs = BigInt(static_cast<unsigned long>(n)) *
                       BigInt(static_cast<unsigned long>(n - 1)) / 2;
  summary.apl = make_rat(summary.pi, pairs);
  return summary;
}

const char* SampledApl::csv_header() { return "t,estimate,std_err,pairs,seed"; }

std::string SampledApl::csv() const {
  std::ostringstream os;
  os << csv_header() << '\n'
     << t << ',' << format_double(estimate) << ',' << format_double(std_err)
     << ',' << pairs << ',' << seed << '\n';
  return os.str();
}

SampledApl sampled_apl(const Network& net, std::uint64_t pairs, std::uint64_t seed) {
  if (pairs == 0) throw std::invalid_argument("pairs must be >= 1");
  const std::uint64_t n = net.vertex_count();
  if (n < 2) throw std::invalid_argument("t = 0 network has no vertex pairs");

  const unsigned __int128 total =
      static_cast<unsigned __int128>(n) * (n - 1) / 2;
  BfsScratch scratch(n);
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    StreamRng rng(seed, i);
    const unsigned __int128 r = rng.next_below(total);
    // Row a holds pairs (a, b), b > a; cum(a) = a n - a(a+1)/2 pairs precede.
    std::uint64_t lo = 0, hi = n - 1;
    while (lo + 1 < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      const unsigned __int128 cum =
          static_cast<unsigned __int128>(mid) * n -
          static_cast<unsigned __int128>(mid) * (mid + 1) / 2;
      if (cum <= r) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const std::uint64_t a = lo;
    const unsigned __int128 cum = static_cast<unsigned __int128>(a) * n -
                                  static_cast<unsigned __int128>(a) * (a + 1) / 2;
    const std::uint64_t b = a + 1 + static_cast<std::uint64_t>(r - cum);
    const std::uint32_t d = scratch.run_to(net, static_cast<std::uint32_t>(a),
                                           static_cast<std::uint32_t>(b));
    sum += d;
    sum_sq += static_cast<unsigned __int128>(d) * d;
  }

  SampledApl out;
  out.t = net.t();
  out.pairs = pairs;
  out.seed = seed;
  const double mean = static_cast<double>(sum) / static_cast<double>(pairs);
  out.estimate = mean;
  if (pairs > 1) {
    const double ss = static_cast<double>(sum_sq);
    const double var =
        (ss - static_cast<double>(pairs) * mean * mean) / static_cast<double>(pairs - 1);
    out.std_err = var > 0 ? std::sqrt(var / static_cast<double>(pairs)) : 0.0;
  }
  return out;
}

}  // namespace sgnet
