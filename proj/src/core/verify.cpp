/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "core/counting.hpp"
#include "core/distance.hpp"
#include "core/geometry.hpp"
#include "core/network.hpp"
#include "core/renewal.hpp"
#include "core/rng.hpp"
#include "core/word.hpp"

namespace sgnet::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
 public:
  explicit Runner(std::string name) : start_(Clock::now()) {
    result_.name = std::move(name);
    result_.passed = true;
  }

  bool ok() const { return result_.passed; }

  template <class DetailFn>
  void expect(bool condition, DetailFn&& detail) {
    ++result_.checks;
    if (!condition && result_.passed) {
      result_.passed = false;
      result_.detail = detail();
    }
  }

  void expect(bool condition, const char* detail) {
    expect(condition, [detail] { return std::string(detail); });
  }

  CheckResult finish() {
    result_.elapsed_s =
        std::chrono::duration<double>(Clock::now() - start_).count();
    return result_;
  }

 private:
  CheckResult result_;
  Clock::time_point start_;
};

// tmax <= 0 picks the default; anything else is clamped to the hard cap.
int pick(int tmax, int def, int cap) {
  if (tmax <= 0) return def;
  return std::min(tmax, cap);
}

std::vector<Word> words_up_to(int maxlen) {
  const std::uint64_t n = vertex_count_for(maxlen);
  std::vector<Word> out;
  out.reserve(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    out.push_back(word_of(static_cast<std::int64_t>(v), maxlen));
  }
  return out;
}

// Odometer over all digit strings of a fixed length; returns false when done.
bool next_word_string(std::string& w) {
  int i = static_cast<int>(w.size()) - 1;
  while (i >= 0 && w[static_cast<std::size_t>(i)] == '3') {
    w[static_cast<std::size_t>(i)] = '1';
    --i;
  }
  if (i < 0) return false;
  ++w[static_cast<std::size_t>(i)];
  return true;
}

std::string pair_detail(const Word& a, const Word& b, const char* what) {
  return std::string(what) + " for (" + a.cli_str() + ", " + b.cli_str() + ")";
}

}  // namespace

std::string CheckResult::line() const {
  std::ostringstream os;
  os << (passed ? "PASS " : "FAIL ") << name << " checks=" << checks;
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", elapsed_s);
  os << buf;
  if (!passed && !detail.empty()) os << "\n  counterexample: " << detail;
  return os.str();
}

// ---------------------------------------------------------------- neighbors

CheckResult check_neighbor_symmetry(int tmax) {
  Runner run("neighbor-symmetry");
  const int maxlen = pick(tmax, 5, 6);
  const auto words = words_up_to(maxlen);
  for (std::size_t i = 0; i < words.size() && run.ok(); ++i) {
    run.expect(!are_neighbors(words[i], words[i]),
               [&] { return "reflexive edge at " + words[i].cli_str(); });
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (are_neighbors(words[i], words[j]) != are_neighbors(words[j], words[i])) {
        run.expect(false, [&] { return pair_detail(words[i], words[j], "asymmetry"); });
        break;
      }
      run.expect(true, "");
    }
  }
  return run.finish();
}

CheckResult check_claim1_prefix_pairs(int tmax) {
  Runner run("claim1-prefix-extension");
  const int maxlen = pick(tmax, 8, 9);
  for (int len = 1; len <= maxlen && run.ok(); ++len) {
    std::string s(static_cast<std::size_t>(len), '1');
    do {
      const Word tau = Word::parse(s);
      for (int p = 0; p < len; ++p) {
        const Word sigma = tau.prefix(static_cast<std::size_t>(p));
        const bool expected =
            distinct_letters(std::string_view{s}.substr(static_cast<std::size_t>(p))) <= 2;
        if (are_neighbors(sigma, tau) != expected) {
          run.expect(false, [&] { return pair_detail(sigma, tau, "claim 1 mismatch"); });
          return run.finish();
        }
        run.expect(true, "");
      }
    } while (next_word_string(s));
  }
  return run.finish();
}

CheckResult check_f_chain(int tmax) {
  Runner run("f-chain");
  const int maxlen = pick(tmax, 8, 9);
  for (int len = 1; len <= maxlen && run.ok(); ++len) {
    std::string s(static_cast<std::size_t>(len), '1');
    do {
      Word u = Word::parse(s);
      std::size_t steps = 0;
      const std::size_t om = omega(u);
      while (!u.empty()) {
        const Word v = f_map(u);
        if (!(v.empty() || is_prefix(v, u)) || !are_neighbors(u, v)) {
          run.expect(false, [&] { return pair_detail(u, v, "f-chain step broken"); });
          return run.finish();
        }
        run.expect(true, "");
        u = v;
        ++steps;
      }
      run.expect(steps == om, [&] {
        return "omega(" + s + ") != f-iteration count";
      });
    } while (next_word_string(s));
  }
  return run.finish();
}

CheckResult check_normal_decomposition(int tmax) {
  Runner run("normal-decomposition");
  const int maxlen = pick(tmax, 8, 9);
  for (int len = 1; len <= maxlen && run.ok(); ++len) {
    std::string s(static_cast<std::size_t>(len), '1');
    do {
      const Word w = Word::parse(s);
      const NormalDecomposition d = normal_decomposition(w);
      std::string joined;
      for (const Word& b : d.blocks) joined += b.str();
      bool good = joined == s && d.block_count() == omega(w) &&
                  !d.blocks.empty() && !d.blocks.front().empty() &&
                  distinct_letters(d.blocks.front().str()) <= 2;
      for (std::size_t i = 1; good && i < d.blocks.size(); ++i) {
        good = d.blocks[i].size() >= 2 && distinct_letters(d.blocks[i].str()) == 2;
      }
      for (std::size_t i = 0; good && i + 1 < d.blocks.size(); ++i) {
        // tail of tau_i is the unique letter missing from tau_{i+1}
        unsigned mask = 0;
        for (std::size_t k = 0; k < d.blocks[i + 1].size(); ++k) {
          mask |= 1u << (d.blocks[i + 1].letter(k) - 1);
        }
        const int missing = 1 + std::countr_one(mask);
        const Word& b = d.blocks[i];
        good = b.letter(b.size() - 1) == missing;
      }
      if (!good) {
        run.expect(false, [&] { return "decomposition invariant broken at " + s; });
        return run.finish();
      }
      run.expect(true, "");
    } while (next_word_string(s));
  }
  return run.finish();
}

CheckResult check_omega_lipschitz(int tmax) {
  Runner run("omega-lipschitz");
  const int t = pick(tmax, 7, 7);
  const Network net = build(t);
  const std::uint64_t n = net.vertex_count();
  std::vector<std::uint32_t> om(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    om[v] = static_cast<std::uint32_t>(omega(word_of(static_cast<std::int64_t>(v), t)));
  }
  for (std::uint64_t v = 0; v < n && run.ok(); ++v) {
    for (std::uint32_t u : net.neighbors(v)) {
      if (u <= v) continue;
      const std::uint32_t a = om[v], b = om[u];
      if ((a > b ? a - b : b - a) > 1) {
        run.expect(false, [&] {
          return pair_detail(word_of(static_cast<std::int64_t>(v), t), word_of(u, t),
                             "|omega difference| > 1 across an edge");
        });
        break;
      }
      run.expect(true, "");
    }
  }
  return run.finish();
}

CheckResult check_builder_oracle(int tmax) {
  Runner run("builder-vs-reference");
  const int cap = pick(tmax, 6, kReferenceBuildMax);
  for (int t = 0; t <= cap && run.ok(); ++t) {
    const Network fast = build(t);
    const Network ref = build_reference(t);
    run.expect(fast.edge_count() == ref.edge_count(),
               [&] { return "edge count differs at t = " + std::to_string(t); });
    for (std::uint64_t v = 0; v < fast.vertex_count() && run.ok(); ++v) {
      const auto a = fast.neighbors(v);
      const auto b = ref.neighbors(v);
      if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) {
        run.expect(false, [&] {
          return "adjacency row differs at t = " + std::to_string(t) + ", vertex " +
                 word_of(static_cast<std::int64_t>(v), t).cli_str();
        });
      } else {
        run.expect(true, "");
      }
    }
  }
  return run.finish();
}

CheckResult check_subgraph_self_similarity(int tmax) {
  Runner run("subgraph-self-similarity");
  const int t = std::max(1, pick(tmax, 5, 6));
  const Network g = build(t);
  const Network h = build(t - 1);
  for (int letter = 1; letter <= 3 && run.ok(); ++letter) {
    for (std::uint64_t v = 0; v < h.vertex_count() && run.ok(); ++v) {
      const Word child = word_of(static_cast<std::int64_t>(v), t - 1);
      const Word lifted = Word::parse(std::string(1, static_cast<char>('0' + letter)) +
                                      child.str());
      std::vector<std::uint32_t> expected;
      for (std::uint32_t u : h.neighbors(v)) {
        const Word lifted_u = Word::parse(
            std::string(1, static_cast<char>('0' + letter)) + word_of(u, t - 1).str());
        expected.push_back(static_cast<std::uint32_t>(index_of(lifted_u)));
      }
      std::sort(expected.begin(), expected.end());
      std::vector<std::uint32_t> actual;
      for (std::uint32_t u : g.neighbors(static_cast<std::uint64_t>(index_of(lifted)))) {
        const Word wu = word_of(u, t);
        if (!wu.empty() && wu.letter(0) == letter) actual.push_back(u);
      }
      run.expect(actual == expected, [&] {
        return "branch " + std::to_string(letter) + " edge set differs at " +
               child.cli_str();
      });
    }
  }
  return run.finish();
}

CheckResult check_connectivity_handshake(int tmax) {
  Runner run("connectivity-handshake");
  const int t = pick(tmax, 8, 8);
  const Network net = build(t);
  const std::uint64_t n = net.vertex_count();
  run.expect(n == vertex_count_for(t), "vertex count formula");
  std::uint64_t degree_total = 0;
  for (std::uint64_t v = 0; v < n && run.ok(); ++v) {
    const auto row = net.neighbors(v);
    degree_total += row.size();
    bool sorted_strict = true;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      sorted_strict = sorted_strict && row[i] < row[i + 1];
    }
    run.expect(sorted_strict, [&] {
      return "row not strictly sorted at vertex " + std::to_string(v);
    });
    for (std::uint32_t u : row) {
      if (u == v || !net.has_edge(u, static_cast<std::uint32_t>(v))) {
        run.expect(false, [&] {
          return "loop or asymmetric edge at vertex " + std::to_string(v);
        });
        break;
      }
    }
  }
  run.expect(degree_total == 2 * net.edge_count(), "handshake identity");
  BfsScratch scratch(n);
  const auto& dist = scratch.run(net, 0);
  std::uint64_t reached = 0;
  for (std::uint64_t v = 0; v < n; ++v) reached += dist[v] != 0xFF;
  run.expect(reached == n, "graph not connected");
  return run.finish();
}

// ----------------------------------------------------------------- geometry

CheckResult check_geometry_oracle(int tmax) {
  Runner run("geometry-combinatorics-equivalence");
  const int t = pick(tmax, 5, 6);
  const auto words = words_up_to(t);
  std::vector<GasketTriangle> tris;
  tris.reserve(words.size());
  for (const Word& w : words) tris.push_back(triangle_of(w, t));
  for (std::size_t i = 0; i < words.size() && run.ok(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (boundaries_touch(tris[i], tris[j]) != are_neighbors(words[i], words[j])) {
        run.expect(false, [&] {
          return pair_detail(words[i], words[j], "geometric and combinatorial edges differ");
        });
        break;
      }
      run.expect(true, "");
    }
  }
  return run.finish();
}

CheckResult check_nesting(int tmax) {
  Runner run("prefix-nesting");
  const int t = pick(tmax, 5, 6);
  const auto words = words_up_to(t);
  for (const Word& sigma : words) {
    if (sigma.empty()) continue;
    const GasketTriangle inner = triangle_of(sigma, t);
    for (std::size_t p = 0; p < sigma.size() && run.ok(); ++p) {
      const GasketTriangle outer = triangle_of(sigma.prefix(p), t);
      const bool contained = triangle_contains(outer, inner.v[0]) &&
                             triangle_contains(outer, inner.v[1]) &&
                             triangle_contains(outer, inner.v[2]);
      run.expect(contained, [&] {
        return pair_detail(sigma.prefix(p), sigma, "K_sigma not inside K_tau");
      });
    }
    if (!run.ok()) break;
  }
  return run.finish();
}

// ----------------------------------------------------------------- geodesic

CheckResult check_prop1_root_distance(int tmax) {
  Runner run("prop1-distance-to-root");
  const int t = pick(tmax, 7, 8);
  const Network net = build(t);
  BfsScratch scratch(net.vertex_count());
  const auto& dist = scratch.run(net, 0);
  for (std::uint64_t v = 0; v < net.vertex_count() && run.ok(); ++v) {
    const Word w = word_of(static_cast<std::int64_t>(v), t);
    run.expect(dist[v] == omega(w), [&] {
      return "d(" + w.cli_str() + ", root) != omega";
    });
  }
  return run.finish();
}

CheckResult check_lemma1_first_letter(int tmax) {
  Runner run("lemma1-first-letter-similarity");
  const int t = std::max(1, pick(tmax, 6, 7));
  const Network g = build(t);
  const Network h = build(t - 1);
  BfsScratch sg(g.vertex_count());
  BfsScratch sh(h.vertex_count());
  for (int letter = 1; letter <= 3 && run.ok(); ++letter) {
    const std::string prefix(1, static_cast<char>('0' + letter));
    for (std::uint64_t v = 0; v < h.vertex_count() && run.ok(); ++v) {
      const Word child = word_of(static_cast<std::int64_t>(v), t - 1);
      const auto lifted_v = static_cast<std::uint32_t>(
          index_of(Word::parse(prefix + child.str())));
      const auto& dg = sg.run(g, lifted_v);
      const auto& dh = sh.run(h, static_cast<std::uint32_t>(v));
      for (std::uint64_t u = 0; u < h.vertex_count(); ++u) {
        const auto lifted_u = static_cast<std::uint32_t>(
            index_of(Word::parse(prefix + word_of(u, t - 1).str())));
        if (dg[lifted_u] != dh[u]) {
          run.expect(false, [&] {
            return "d_t(i s', i t') != d_{t-1}(s', t') at i = " + prefix +
                   ", s' = " + child.cli_str() + ", t' = " + word_of(u, t - 1).cli_str();
          });
          break;
        }
        run.expect(true, "");
      }
    }
  }
  return run.finish();
}

CheckResult check_lemma2_stability(int tmax) {
  Runner run("lemma2-distance-stability");
  const int t = pick(tmax, 7, 8);
  const Network big = build(t);
  BfsScratch sbig(big.vertex_count());
  for (int k = 0; k < t && run.ok(); ++k) {
    const Network small = build(k);
    BfsScratch ssmall(small.vertex_count());
    for (std::uint64_t v = 0; v < small.vertex_count() && run.ok(); ++v) {
      const auto& dbig = sbig.run(big, static_cast<std::uint32_t>(v));
      const auto& dsmall = ssmall.run(small, static_cast<std::uint32_t>(v));
      for (std::uint64_t u = 0; u < small.vertex_count(); ++u) {
        if (dbig[u] != dsmall[u]) {
          run.expect(false, [&] {
            return "d_" + std::to_string(t) + " != d_" + std::to_string(k) + " for (" +
                   word_of(static_cast<std::int64_t>(v), k).cli_str() + ", " +
                   word_of(static_cast<std::int64_t>(u), k).cli_str() + ")";
          });
          break;
        }
        run.expect(true, "");
      }
    }
  }
  return run.finish();
}

CheckResult check_lemma3_l_subadditivity(int max_total_len) {
  Runner run("lemma3-l-subadditivity");
  const int cap = pick(max_total_len, 10, 11);
  for (int la = 1; la < cap && run.ok(); ++la) {
    std::string a(static_cast<std::size_t>(la), '1');
    do {
      const std::size_t l_a = omega_str(a) - 1;
      for (int lb = 1; la + lb <= cap; ++lb) {
        std::string b(static_cast<std::size_t>(lb), '1');
        do {
          const std::size_t l_b = omega_str(b) - 1;
          const std::size_t l_ab = omega_str(a + b) - 1;
          if (!(l_a + l_b <= l_ab && l_ab <= l_a + l_b + 1)) {
            run.expect(false, [&] { return "L-subadditivity broken at (" + a + ", " + b + ")"; });
            return run.finish();
          }
          run.expect(true, "");
        } while (next_word_string(b));
      }
    } while (next_word_string(a));
  }
  return run.finish();
}

CheckResult check_cross_letter_sandwich(int tmax) {
  Runner run("cross-letter-sandwich");
  const int t = std::max(1, pick(tmax, 6, 6));
  const Network net = build(t);
  const std::uint64_t n = net.vertex_count();
  std::vector<std::uint8_t> first(n, 0);
  std::vector<std::uint8_t> tail_l(n, 0);
  for (std::uint64_t v = 1; v < n; ++v) {
    const Word w = word_of(static_cast<std::int64_t>(v), t);
    first[v] = static_cast<std::uint8_t>(w.letter(0));
    const std::string_view tail = std::string_view{w.str()}.substr(1);
    tail_l[v] = static_cast<std::uint8_t>(tail.empty() ? 0 : omega_str(tail) - 1);
  }
  BfsScratch scratch(n);
  for (std::uint64_t v = 1; v < n && run.ok(); ++v) {
    const auto& dist = scratch.run(net, static_cast<std::uint32_t>(v));
    for (std::uint64_t u = v + 1; u < n; ++u) {
      if (first[u] == first[v]) continue;
      const unsigned lo = tail_l[v] + tail_l[u];
      const unsigned d = dist[u];
      if (!(lo <= d && d <= lo + 3)) {
        run.expect(false, [&] {
          return pair_detail(word_of(static_cast<std::int64_t>(v), t), word_of(u, t),
                             "cross-letter sandwich broken");
        });
        break;
      }
      run.expect(true, "");
    }
  }
  return run.finish();
}

CheckResult check_pi_recursion(int tmax) {
  Runner run("pi-recursion");
  const int cap = pick(tmax, 7, 8);
  DistanceSummary prev;
  for (int t = 1; t <= cap && run.ok(); ++t) {
    const Network net = build(t);
    const DistanceSummary cur = all_pairs_summary(net, 0, cap);
    if (t >= 2) {
      run.expect(cur.mu == 3 * prev.pi,
                 [&] { return "mu_t != 3 pi_{t-1} at t = " + std::to_string(t); });
      run.expect(cur.pi == 3 * prev.pi + cur.lambda + cur.nu,
                 [&] { return "pi recursion broken at t = " + std::to_string(t); });
    }
    prev = cur;
  }
  return run.finish();
}

CheckResult check_metric_sanity(int tmax) {
  Runner run("bfs-metric-sanity");
  const int t = pick(tmax, 5, 6);
  const Network net = build(t);
  const std::uint64_t n = net.vertex_count();
  BfsScratch sa(n), sb(n);
  StreamRng rng(0x5EEDD15Cull, 0);
  for (int trial = 0; trial < 200 && run.ok(); ++trial) {
    const auto a = static_cast<std::uint32_t>(rng.next() % n);
    const auto b = static_cast<std::uint32_t>(rng.next() % n);
    const auto& da = sa.run(net, a);
    const auto& db = sb.run(net, b);
    run.expect(da[b] == db[a], "BFS distance not symmetric");
    run.expect(da[a] == 0, "nonzero self distance");
    const unsigned dab = da[b];
    for (std::uint64_t c = 0; c < n; ++c) {
      if (dab > static_cast<unsigned>(da[c]) + db[c]) {
        run.expect(false, "triangle inequality broken");
        break;
      }
      run.expect(true, "");
    }
  }
  return run.finish();
}

// ----------------------------------------------------------------- counting

CheckResult check_counting_closed_forms(int kmax) {
  Runner run("counting-closed-forms");
  const int cap = pick(kmax, 60, 512);
  for (int k = 1; k <= cap; ++k) {
    run.expect(count_T(k) == pow2(static_cast<unsigned long>(k)) - 2, "T(k) closed form");
    run.expect(2 * count_M(k) == count_T(k), "2 M(k) = T(k)");
    run.expect(count_e(k) == 3 * count_h(k), "e(k) = 3 h(k)");
  }
  // enumeration oracle for the defining sets, small k
  for (int k = 1; k <= std::min(cap, 9) && run.ok(); ++k) {
    long t_cnt = 0, m_cnt = 0;
    std::string two(static_cast<std::size_t>(k), '1');
    do {
      bool has2 = false, has1 = false;
      for (char c : two) (c == '1' ? has1 : has2) = true;
      if (has1 && has2) {
        ++t_cnt;
        if (two.back() == '1') ++m_cnt;
      }
      // advance over {1,2}
      int i = k - 1;
      while (i >= 0 && two[static_cast<std::size_t>(i)] == '2') {
        two[static_cast<std::size_t>(i)] = '1';
        --i;
      }
      if (i < 0) break;
      ++two[static_cast<std::size_t>(i)];
    } while (true);
    long h_cnt = 0, e_cnt = 0;
    std::string three(static_cast<std::size_t>(k), '1');
    do {
      if (distinct_letters(three) <= 2) {
        ++e_cnt;
        if (three.back() == '1') ++h_cnt;
      }
    } while (next_word_string(three));
    run.expect(count_T(k) == t_cnt, [&] { return "T enumeration at k = " + std::to_string(k); });
    run.expect(count_M(k) == m_cnt, [&] { return "M enumeration at k = " + std::to_string(k); });
    run.expect(count_h(k) == h_cnt, [&] { return "h enumeration at k = " + std::to_string(k); });
    run.expect(count_e(k) == e_cnt, [&] { return "e enumeration at k = " + std::to_string(k); });
  }
  return run.finish();
}

namespace {

// Sum of W over all compositions of t, by explicit recursive enumeration;
// independent of the convolution path.
BigInt composition_sum_enumerated(int t) {
  BigInt total = 0;
  // leading part k1 >= 1, later parts >= 2 (parts of 1 would contribute 0)
  std::function<void(int, const BigInt&)> rec = [&](int remaining, const BigInt& weight) {
    if (remaining == 0) {
      total += weight;
      return;
    }
    for (int k = 2; k <= remaining; ++k) {
      rec(remaining - k, weight * count_T(k));
    }
  };
  for (int k1 = 1; k1 <= t; ++k1) {
    rec(t - k1, 3 * count_h(k1));
  }
  return total;
}

}  // namespace

CheckResult check_composition_completeness(int tmax_identity) {
  Runner run("composition-completeness");
  const int cap = pick(tmax_identity, 60, 512);
  for (int t = 1; t <= cap; ++t) {
    run.expect(composition_weight_total(t) == pow3(static_cast<unsigned long>(t)),
               [&] { return "Sigma W != 3^t at t = " + std::to_string(t); });
  }
  for (int t = 1; t <= std::min(cap, 20); ++t) {
    run.expect(composition_sum_enumerated(t) == pow3(static_cast<unsigned long>(t)),
               [&] { return "enumerated Sigma W != 3^t at t = " + std::to_string(t); });
  }
  return run.finish();
}

CheckResult check_sum_omega_enumeration(int tmax) {
  Runner run("sum-omega-enumeration");
  const int cap = pick(tmax, 12, 13);
  for (int t = 1; t <= cap; ++t) {
    run.expect(sum_omega(t) == sum_omega_enumerated(t),
               [&] { return "sum_omega mismatch at t = " + std::to_string(t); });
  }
  return run.finish();
}

CheckResult check_sum_omega_quadratic(int tmax) {
  Runner run("sum-omega-quadratic-convolution");
  const int cap = pick(tmax, 300, 1024);
  // Plain O(t^2) evaluation of the same block convolution.
  std::vector<BigInt> g(static_cast<std::size_t>(cap) + 1);
  std::vector<BigInt> wb(static_cast<std::size_t>(cap) + 1);
  g[0] = 1;
  for (int s = 2; s <= cap; ++s) {
    for (int k = 2; k <= s; ++k) {
      const auto i = static_cast<std::size_t>(s - k);
      g[static_cast<std::size_t>(s)] += count_T(k) * g[i];
      wb[static_cast<std::size_t>(s)] += count_T(k) * (wb[i] + g[i]);
    }
  }
  for (int t = 1; t <= cap; ++t) {
    BigInt total = 0;
    for (int k = 1; k <= t; ++k) {
      const auto i = static_cast<std::size_t>(t - k);
      total += count_e(k) * (g[i] + wb[i]);
    }
    run.expect(total == sum_omega(t),
               [&] { return "quadratic convolution mismatch at t = " + std::to_string(t); });
  }
  return run.finish();
}

CheckResult check_w_profile_enumeration(int tmax) {
  Runner run("w-count-vs-block-profiles");
  const int cap = pick(tmax, 10, 11);
  for (int t = 1; t <= cap && run.ok(); ++t) {
    std::map<std::vector<std::int64_t>, long> histogram;
    std::string s(static_cast<std::size_t>(t), '1');
    do {
      const NormalDecomposition d = normal_decomposition(Word::parse(s));
      std::vector<std::int64_t> profile;
      profile.reserve(d.blocks.size());
      for (const Word& b : d.blocks) profile.push_back(static_cast<std::int64_t>(b.size()));
      ++histogram[profile];
    } while (next_word_string(s));

    // every composition of t, including the zero-weight ones
    std::vector<std::int64_t> parts;
    std::function<void(int)> rec = [&](int remaining) {
      if (remaining == 0) {
        const auto it = histogram.find(parts);
        const long counted = it == histogram.end() ? 0 : it->second;
        run.expect(W_count(parts) == counted, [&] {
          std::string p;
          for (auto k : parts) p += std::to_string(k) + ",";
          return "W(" + p + ") != enumerated count at t = " + std::to_string(t);
        });
        return;
      }
      const bool leading = parts.empty();
      for (int k = leading ? 1 : 2; k <= remaining; ++k) {
        parts.push_back(k);
        rec(remaining - k);
        parts.pop_back();
      }
    };
    rec(t);
    // and the histogram total is 3^t
    long total = 0;
    for (const auto& [profile, cnt] : histogram) total += cnt;
    run.expect(BigInt(total) == pow3(static_cast<unsigned long>(t)), "profile total != 3^t");
  }
  return run.finish();
}

CheckResult check_w_suffix_factor() {
  Runner run("w-suffix-factor");
  StreamRng rng(20260810, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int l = 2 + static_cast<int>(rng.next() % 7);
    std::vector<std::int64_t> parts;
    parts.push_back(1 + static_cast<std::int64_t>(rng.next() % 20));
    for (int i = 1; i < l; ++i) parts.push_back(2 + static_cast<std::int64_t>(rng.next() % 19));
    const std::vector<std::int64_t> head(parts.begin(), parts.end() - 1);
    run.expect(W_count(parts) == count_T(parts.back()) * W_count(head),
               "W suffix factorization broken");
  }
  return run.finish();
}

CheckResult check_alpha_superadditivity(int sum_max) {
  Runner run("alpha-superadditivity");
  const int cap = pick(sum_max, 60, 512);
  std::vector<BigRat> alpha(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) alpha[static_cast<std::size_t>(k)] = alpha_bar(k);
  for (int k1 = 1; k1 <= cap; ++k1) {
    for (int k2 = k1; k1 + k2 <= cap; ++k2) {
      const BigRat sum = alpha[static_cast<std::size_t>(k1)] + alpha[static_cast<std::size_t>(k2)];
      const BigRat& whole = alpha[static_cast<std::size_t>(k1 + k2)];
      if (!(sum <= whole && whole <= sum + 1)) {
        run.expect(false, [&] {
          return "superadditivity window broken at k1 = " + std::to_string(k1) +
                 ", k2 = " + std::to_string(k2);
        });
        return run.finish();
      }
      run.expect(true, "");
    }
  }
  for (int k = 0; k < cap; ++k) {
    run.expect(alpha[static_cast<std::size_t>(k + 1)] >= alpha[static_cast<std::size_t>(k)],
               [&] { return "alpha not monotone at k = " + std::to_string(k); });
  }
  return run.finish();
}

CheckResult check_alpha_ratio_limit(int tmax) {
  Runner run("alpha-ratio-limit");
  const int cap = pick(tmax, 800, 20000);
  BigInt prev_num, prev_den;  // previous ratio as num/den
  scan_alpha_series(cap, [&](int t, const BigInt& som, const BigInt& p3, const BigInt&) {
    const BigInt num = som - p3;     // alpha numerator over p3
    const BigInt den = t * p3;       // ratio = num / den
    run.expect(9 * num < 2 * den, [&] {
      return "alpha_m/m not strictly below 2/9 at m = " + std::to_string(t);
    });
    if (t > 3) {
      run.expect(prev_num * den < num * prev_den, [&] {
        return "alpha_m/m not strictly increasing at m = " + std::to_string(t);
      });
    }
    prev_num = num;
    prev_den = den;
  });
  return run.finish();
}

CheckResult check_chi_bounds(int tmax) {
  Runner run("chi-bounds");
  const int cap = pick(tmax, 10000, 100000);
  run.expect(chi(1) == BigRat(3, 4), "chi(1) != 3/4");
  BigInt weighted = 0, total = 1, p = 1;
  for (int t = 1; t <= cap; ++t) {
    p *= 3;
    weighted += t * p;
    total += p;
    run.expect(weighted <= t * total,
               [&] { return "chi > 1 at t = " + std::to_string(t); });
    if (t == 1000) {
      // |chi - 1| < 1e-2  <=>  100 (t total - weighted) < t total
      run.expect(100 * (t * total - weighted) < t * total, "chi(1000) not within 1e-2 of 1");
    }
  }
  return run.finish();
}

CheckResult check_kappa_trend(int tmax) {
  Runner run("kappa-trend");
  const int cap = pick(tmax, 2000, 10000);
  run.expect(kappa(2) == BigRat(0), "kappa(2) != 0");
  run.expect(kappa(3) == BigRat(3, 20), "kappa(3) != 3/20");
  BigInt prev_num(-1), prev_den(1);
  scan_alpha_series(cap, [&](int t, const BigInt&, const BigInt& p3, const BigInt& prefix) {
    // kappa_t / t = 2 prefix / (t (3 p3 - 1))
    const BigInt num = 2 * prefix;
    const BigInt den = t * (3 * p3 - 1);
    run.expect(9 * num < 2 * den,
               [&] { return "kappa_t/t not below 2/9 at t = " + std::to_string(t); });
    run.expect(prev_num * den <= num * prev_den,
               [&] { return "kappa_t/t decreased at t = " + std::to_string(t); });
    prev_num = num;
    prev_den = den;
  });
  return run.finish();
}

// ------------------------------------------------------------------ renewal

CheckResult check_pmf_partials() {
  Runner run("pmf-partial-sums");
  for (long k = 2; k <= 120; ++k) {
    run.expect(sgn(s_pmf(k)) > 0, "pmf not positive");
    run.expect(s_pmf_partial_sum(k) < 1, "partial sum reached 1");
  }
  BigInt q15, q8;
  mpz_ui_pow_ui(q15.get_mpz_t(), 10, 15);
  mpz_ui_pow_ui(q8.get_mpz_t(), 10, 8);
  const BigRat tail = 1 - s_pmf_partial_sum(120);
  run.expect(tail > 0 && tail < make_rat(1, q15),
             "pmf truncated at k = 120 not within 1e-15 of 1");
  const BigRat mean_gap = BigRat(9, 2) - s_mean_partial_sum(120);
  run.expect(mean_gap > 0 && mean_gap < make_rat(1, q8),
             "E(S) partial sum at k = 120 not within 1e-8 of 9/2");
  return run.finish();
}

CheckResult check_ey_exact_values(int enum_tmax) {
  Runner run("renewal-exact-values");
  const int cap = pick(enum_tmax, 9, 10);
  const RenewalExact series(std::max(cap, 4));
  run.expect(series.ey(0) == 0 && series.ey(1) == 0, "E(Y_0), E(Y_1) base cases");
  run.expect(series.ey(2) == BigRat(2, 9), "E(Y_2) != 2/9");
  run.expect(series.ey(3) == BigRat(4, 9), "E(Y_3) != 4/9");
  run.expect(series.ey(4) == BigRat(2, 3), "E(Y_4) != 2/3");
  // exhaustive oracle: E(Y_t) 3^t = total renewals over all letter sequences
  for (int t = 1; t <= cap; ++t) {
    long total = 0;
    std::vector<int> letters(static_cast<std::size_t>(t), 1);
    while (true) {
      total += static_cast<long>(renewal_scan(letters).size());
      int i = t - 1;
      while (i >= 0 && letters[static_cast<std::size_t>(i)] == 3) {
        letters[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++letters[static_cast<std::size_t>(i)];
    }
    run.expect(series.scaled(t) == total,
               [&] { return "enumerated E(Y_t) mismatch at t = " + std::to_string(t); });
  }
  return run.finish();
}

CheckResult check_ey_naive_recursion(int tmax) {
  Runner run("renewal-naive-recursion");
  const int cap = pick(tmax, 300, 1024);
  const RenewalExact series(cap);
  std::vector<BigRat> naive(static_cast<std::size_t>(cap) + 1, BigRat(0));
  std::vector<BigRat> pmf(static_cast<std::size_t>(cap) + 1, BigRat(0));
  for (int k = 2; k <= cap; ++k) pmf[static_cast<std::size_t>(k)] = s_pmf(k);
  for (int t = 2; t <= cap; ++t) {
    BigRat acc(0);
    for (int k = 2; k <= t; ++k) {
      acc += pmf[static_cast<std::size_t>(k)] * (1 + naive[static_cast<std::size_t>(t - k)]);
    }
    naive[static_cast<std::size_t>(t)] = acc;
    run.expect(acc == series.ey(t),
               [&] { return "naive recursion mismatch at t = " + std::to_string(t); });
  }
  return run.finish();
}

CheckResult check_ey_limit(int t) {
  Runner run("renewal-limit");
  const int cap = t <= 0 ? 2000 : t;
  const RenewalExact series(cap);
  for (int i = 1; i <= cap; ++i) {
    run.expect(series.scaled(i) >= 3 * series.scaled(i - 1),
               [&] { return "E(Y_t) decreased at t = " + std::to_string(i); });
  }
  const BigRat diff = BigRat(2, 9) - series.ey_over_t(cap);
  run.expect(abs(diff) < make_rat(1, 100), "E(Y_t)/t not within 1e-2 of 2/9");
  return run.finish();
}

CheckResult check_renewal_scan_example() {
  Runner run("renewal-scan");
  run.expect(renewal_scan({1, 2, 1, 3, 2, 2, 1, 2, 3}) == std::vector<int>({4, 3, 2}),
             "worked scan example broken");
  run.expect(renewal_scan({2, 2, 2}).empty(), "no third letter must mean no renewal");
  run.expect(renewal_scan({2, 3}) == std::vector<int>({2}), "shortest renewal");
  run.expect(renewal_scan({}).empty(), "empty sequence");
  const RenewalMc a = renewal_mc(60, 2000, 7);
  const RenewalMc b = renewal_mc(60, 2000, 7);
  run.expect(a.estimate == b.estimate && a.std_err == b.std_err,
             "Monte Carlo not reproducible for a fixed seed");
  run.expect(renewal_mc(1, 50, 3).estimate == 0.0, "Y_1 must be exactly 0");
  return run.finish();
}

CheckResult check_mc_vs_exact(int t, std::int64_t samples, std::uint64_t seed) {
  Runner run("renewal-mc-vs-exact");
  const RenewalExact series(t);
  const RenewalMc mc = renewal_mc(t, samples, seed);
  const double exact = mpq_get_d(series.ey(t).get_mpq_t());
  run.expect(mc.std_err > 0, "degenerate standard error");
  run.expect(std::abs(mc.estimate - exact) <= 4 * mc.std_err, [&] {
    return "Monte Carlo estimate off by more than 4 standard errors (t = " +
           std::to_string(t) + ")";
  });
  return run.finish();
}

CheckResult check_lemma6_sandwich(int tmax) {
  Runner run("lemma6-sandwich");
  const int cap = pick(tmax, 500, 2000);
  const auto reports = lemma6_sandwich_range(3, cap);
  for (const auto& rep : reports) {
    run.expect(rep.holds,
               [&] { return "sandwich broken at t = " + std::to_string(rep.t); });
  }
  if (cap >= 500) {
    const auto& rep = reports[500 - 3];
    const BigRat tol = make_rat(2, 100);
    run.expect(abs(rep.a_over_t - BigRat(2, 9)) < tol, "A(500)/500 not within 2e-2 of 2/9");
    run.expect(abs(rep.b_over_t - BigRat(2, 9)) < tol, "B(500)/500 not within 2e-2 of 2/9");
  }
  if (cap >= 10) {
    const auto& rep = reports[10 - 3];
    run.expect(rep.b_over_t == make_rat(sum_omega_enumerated(10), 10 * pow3(10)),
               "B(10) does not match the enumeration oracle");
  }
  return run.finish();
}

// -------------------------------------------------------------------- suite

namespace {

std::vector<CheckResult> neighbors_suite(int tmax) {
  return {check_neighbor_symmetry(tmax),   check_claim1_prefix_pairs(tmax),
          check_f_chain(tmax),             check_normal_decomposition(tmax),
          check_omega_lipschitz(tmax),     check_builder_oracle(tmax),
          check_subgraph_self_similarity(tmax), check_connectivity_handshake(tmax)};
}

std::vector<CheckResult> geometry_suite(int tmax) {
  return {check_geometry_oracle(tmax), check_nesting(tmax)};
}

std::vector<CheckResult> geodesic_suite(int tmax) {
  return {check_prop1_root_distance(tmax), check_lemma1_first_letter(tmax),
          check_lemma2_stability(tmax),    check_lemma3_l_subadditivity(tmax > 0 ? tmax + 3 : 0),
          check_cross_letter_sandwich(tmax), check_pi_recursion(tmax),
          check_metric_sanity(tmax)};
}

std::vector<CheckResult> counting_suite(int tmax) {
  return {check_counting_closed_forms(0),
          check_composition_completeness(tmax > 0 ? std::max(tmax, 60) : 0),
          check_sum_omega_enumeration(tmax),
          check_sum_omega_quadratic(0),
          check_w_profile_enumeration(tmax),
          check_w_suffix_factor(),
          check_alpha_superadditivity(0),
          check_alpha_ratio_limit(0),
          check_chi_bounds(0),
          check_kappa_trend(0)};
}

std::vector<CheckResult> renewal_suite(int tmax) {
  return {check_pmf_partials(),
          check_ey_exact_values(0),
          check_ey_naive_recursion(0),
          check_ey_limit(0),
          check_renewal_scan_example(),
          check_mc_vs_exact(200, 100000, 20260810),
          check_lemma6_sandwich(tmax)};
}

}  // namespace

bool suite_known(const std::string& suite) {
  return suite == "all" || suite == "neighbors" || suite == "geometry" ||
         suite == "geodesic" || suite == "counting" || suite == "renewal";
}

std::vector<CheckResult> run_suite(
    const std::string& suite, int tmax,
    const std::function<void(const CheckResult&)>& on_result) {
  if (!suite_known(suite)) {
    throw std::invalid_argument("unknown suite \"" + suite +
                                "\" (expected all, neighbors, geometry, geodesic, "
                                "counting or renewal)");
  }
  std::vector<CheckResult> results;
  auto append = [&](std::vector<CheckResult> part) {
    for (auto& r : part) {
      if (on_result) on_result(r);
      results.push_back(std::move(r));
    }
  };
  if (suite == "all" || suite == "neighbors") append(neighbors_suite(tmax));
  if (suite == "all" || suite == "geometry") append(geometry_suite(tmax));
  if (suite == "all" || suite == "geodesic") append(geodesic_suite(tmax));
  if (suite == "all" || suite == "counting") append(counting_suite(tmax));
  if (suite == "all" || suite == "renewal") append(renewal_suite(tmax));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace sgnet::verify
