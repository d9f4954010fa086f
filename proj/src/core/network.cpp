/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/network.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "core/parallel.hpp"

namespace sgnet {

std::uint64_t vertex_count_for(int t) {
  if (t < 0 || t > 38) throw std::invalid_argument("t out of range [0, 38]");
  std::uint64_t p = 1;
  for (int i = 0; i <= t; ++i) p *= 3;
  return (p - 1) / 2;
}

std::int64_t index_of(const Word& w) {
  if (w.size() > 39) throw std::invalid_argument("word too long to index");
  std::int64_t base = 0, digits = 0, p = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    base += p;
    digits = digits * 3 + (w.letter(i) - 1);
    p *= 3;
  }
  return base + digits;
}

Word word_of(std::int64_t index, int t) {
  if (index < 0 || static_cast<std::uint64_t>(index) >= vertex_count_for(t)) {
    throw OutOfRange("index " + std::to_string(index) + " outside V_" +
                     std::to_string(t));
  }
  int len = 0;
  std::int64_t base = 0, span = 1;
  while (index >= base + span) {
    base += span;
    span *= 3;
    ++len;
  }
  std::int64_t digits = index - base;
  std::string s(static_cast<std::size_t>(len), '0');
  for (int i = len - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = static_cast<char>('1' + digits % 3);
    digits /= 3;
  }
  return Word::parse(s);
}

bool Network::has_edge(std::uint32_t a, std::uint32_t b) const {
  const auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Word> neighbors_of(const Word& w, int t) {
  std::vector<std::pair<std::int64_t, Word>> out;
  for_each_neighbor(w, t, [&](const Word& u) { out.emplace_back(index_of(u), u); });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Word> words;
  words.reserve(out.size());
  for (auto& [idx, word] : out) words.push_back(std::move(word));
  return words;
}

Network build(int t, int max_t, int threads) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (max_t < 0) max_t = kDefaultBuildCap;
  if (t > max_t) {
    throw CapExceeded("t = " + std::to_string(t) + " exceeds the build cap (max t = " +
                      std::to_string(max_t) + ")");
  }
  const std::uint64_t n = vertex_count_for(t);

  Network net;
  net.t_ = t;
  std::vector<std::uint64_t> degree(n, 0);
  parallel_chunks(n, threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t v = begin; v < end; ++v) {
      const Word w = word_of(static_cast<std::int64_t>(v), t);
      std::uint64_t d = 0;
      for_each_neighbor(w, t, [&](const Word&) { ++d; });
      degree[v] = d;
    }
  });

  net.offsets_.assign(n + 1, 0);
  for (std::uint64_t v = 0; v < n; ++v) net.offsets_[v + 1] = net.offsets_[v] + degree[v];
  const std::uint64_t total = net.offsets_[n];
  net.adjacency_.resize(total);
  net.edge_count_ = total / 2;

  parallel_chunks(n, threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t v = begin; v < end; ++v) {
      const Word w = word_of(static_cast<std::int64_t>(v), t);
      std::uint32_t* row = net.adjacency_.data() + net.offsets_[v];
      std::uint64_t k = 0;
      for_each_neighbor(w, t, [&](const Word& u) {
        row[k++] = static_cast<std::uint32_t>(index_of(u));
      });
      std::sort(row, row + k);
    }
  });
  return net;
}

Network build_reference(int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (t > kReferenceBuildMax) {
    throw CapExceeded("build_reference is quadratic; max t = " +
                      std::to_string(kReferenceBuildMax));
  }
  const std::uint64_t n = vertex_count_for(t);
  std::vector<Word> words;
  words.reserve(n);
  for (std::uint64_t v = 0; v < n; ++v) words.push_back(word_of(static_cast<std::int64_t>(v), t));

  Network net;
  net.t_ = t;
  net.offsets_.assign(n + 1, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint64_t d = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
      d += (u != v && are_neighbors(words[v], words[u])) ? 1 : 0;
    }
    net.offsets_[v + 1] = net.offsets_[v] + d;
  }
  net.adjacency_.resize(net.offsets_[n]);
  net.edge_count_ = net.offsets_[n] / 2;
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint64_t k = net.offsets_[v];
    for (std::uint64_t u = 0; u < n; ++u) {
      if (u != v && are_neighbors(words[v], words[u])) {
        net.adjacency_[k++] = static_cast<std::uint32_t>(u);
      }
    }
  }
  return net;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edge-list-tsv") return ExportFormat::kEdgeListTsv;
  if (name == "adjacency-jsonl") return ExportFormat::kAdjacencyJsonl;
  if (name == "metadata-json") return ExportFormat::kMetadataJson;
  throw std::invalid_argument("unknown format \"" + std::string(name) +
                              "\" (expected edge-list-tsv, adjacency-jsonl or "
                              "metadata-json)");
}

void export_network(const Network& net, ExportFormat format, std::ostream& out) {
  const std::uint64_t n = net.vertex_count();
  switch (format) {
    case ExportFormat::kEdgeListTsv: {
      std::vector<std::string> lines;
      lines.reserve(net.edge_count());
      for (std::uint64_t v = 0; v < n; ++v) {
        const std::string a = word_of(static_cast<std::int64_t>(v), net.t()).cli_str();
        for (std::uint32_t u : net.neighbors(v)) {
          if (u <= v) continue;  // one line per undirected edge
          const std::string b = word_of(u, net.t()).cli_str();
          lines.push_back(a < b ? a + "\t" + b : b + "\t" + a);
        }
      }
      std::sort(lines.begin(), lines.end());
      for (const auto& line : lines) out << line << '\n';
      break;
    }
    case ExportFormat::kAdjacencyJsonl: {
      for (std::uint64_t v = 0; v < n; ++v) {
        out << "{\"word\":\"" << word_of(static_cast<std::int64_t>(v), net.t()).cli_str()
            << "\",\"neighbors\":[";
        bool first = true;
        for (std::uint32_t u : net.neighbors(v)) {
          if (!first) out << ',';
          first = false;
          out << '"' << word_of(u, net.t()).cli_str() << '"';
        }
        out << "]}\n";
      }
      break;
    }
    case ExportFormat::kMetadataJson: {
      out << "{\"t\":" << net.t() << ",\"vertex_count\":" << n
          << ",\"edge_count\":" << net.edge_count() << "}\n";
      break;
    }
  }
}

}  // namespace sgnet
