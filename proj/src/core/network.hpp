/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"
#include "core/word.hpp"

namespace sgnet {

// Default build cap: t = 16 is about 64M vertices of adjacency, past desk
// scale already; raise explicitly if you mean it.
inline constexpr int kDefaultBuildCap = 16;
inline constexpr int kReferenceBuildMax = 7;

// #V_t = (3^{t+1} - 1) / 2. Requires t <= 38 (64-bit).
std::uint64_t vertex_count_for(int t);

// Canonical vertex rank: words ordered by length, then lexicographically;
// index = (3^|w| - 1)/2 + base-3 value of (letters - 1).
std::int64_t index_of(const Word& w);
// Inverse over V_t. Throws OutOfRange for indices outside [0, #V_t).
Word word_of(std::int64_t index, int t);

// Immutable adjacency of G_t in CSR form; rows sorted ascending by index.
class Network {
 public:
  int t() const { return t_; }
  std::uint64_t vertex_count() const { return offsets_.size() - 1; }
  std::uint64_t edge_count() const { return edge_count_; }
  std::span<const std::uint32_t> neighbors(std::uint64_t v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  bool has_edge(std::uint32_t a, std::uint32_t b) const;

 private:
  friend Network build(int, int, int);
  friend Network build_reference(int);
  int t_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> adjacency_;
};

// Visits exactly {tau in V_t : are_neighbors(w, tau)} without scanning V_t:
//   (a) ancestors: strict prefixes whose deleted suffix uses <= 2 letters;
//   (b) descendants: w extended by any nonempty <= 2-letter tail;
//   (c) lateral partners from the at most two suffix parses w = b i j^k
//       (k = 0 with the last letter, or k = the maximal constant tail run),
//       emitting b j i^k' for every admissible k'.
// The parse enumeration is an implementation derivation, not a paper
// statement; build() is therefore always validated against
// build_reference() in the test suite before trust.
template <class Emit>
void for_each_neighbor(const Word& w, int t, Emit&& emit) {
  if (static_cast<int>(w.size()) > t) {
    throw OutOfRange("word of length " + std::to_string(w.size()) +
                     " not in V_" + std::to_string(t));
  }
  const std::string& s = w.str();
  const int n = static_cast<int>(s.size());

  {  // ancestors
    unsigned mask = 0;
    for (int i = n - 1; i >= 0; --i) {
      const unsigned m = mask | (1u << (s[i] - '1'));
      if (std::popcount(m) > 2) break;
      mask = m;
      emit(w.prefix(static_cast<std::size_t>(i)));
    }
  }

  {  // descendants
    std::string buf = s;
    auto extend = [&](auto&& self, unsigned mask) -> void {
      if (static_cast<int>(buf.size()) == t) return;
      for (int letter = 1; letter <= 3; ++letter) {
        const unsigned m = mask | (1u << (letter - 1));
        if (std::popcount(m) > 2) continue;
        buf.push_back(static_cast<char>('0' + letter));
        emit(Word::parse(buf));
        self(self, m);
        buf.pop_back();
      }
    };
    extend(extend, 0u);
  }

  if (n > 0) {  // lateral partners
    const char last = s[n - 1];
    for (char j = '1'; j <= '3'; ++j) {  // parse with k = 0
      if (j == last) continue;
      std::string buf = s.substr(0, static_cast<std::size_t>(n - 1));
      buf.push_back(j);
      for (int len = n; len <= t; ++len) {
        emit(Word::parse(buf));
        buf.push_back(last);
      }
    }
    int run = 1;  // parse with k = maximal tail run
    while (run < n && s[static_cast<std::size_t>(n - 1 - run)] == last) ++run;
    if (run < n) {
      const char before = s[static_cast<std::size_t>(n - 1 - run)];
      std::string buf = s.substr(0, static_cast<std::size_t>(n - 1 - run));
      buf.push_back(last);
      for (int len = n - run; len <= t; ++len) {
        emit(Word::parse(buf));
        buf.push_back(before);
      }
    }
  }
}

// Neighbor list sorted by canonical index.
std::vector<Word> neighbors_of(const Word& w, int t);

// Adjacency from per-vertex neighbor generation; deterministic regardless of
// thread count (threads = 0 picks the hardware concurrency).
Network build(int t, int max_t = kDefaultBuildCap, int threads = 0);

// Quadratic oracle: exhaustive pairwise are_neighbors. t <= 7.
Network build_reference(int t);

enum class ExportFormat { kEdgeListTsv, kAdjacencyJsonl, kMetadataJson };
// Accepts "edge-list-tsv", "adjacency-jsonl", "metadata-json".
ExportFormat parse_export_format(std::string_view name);
void export_network(const Network& net, ExportFormat format, std::ostream& out);

}  // namespace sgnet
