/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sgnet {

Word Word::parse(std::string_view text) {
  for (char c : text) {
    if (c < '1' || c > '3') {
      throw std::invalid_argument("word must consist of letters 1-3, got \"" +
                                  std::string(text) + "\"");
    }
  }
  return Word(std::string(text));
}

Word Word::parse_cli(std::string_view text) {
  if (text == "-") return Word();
  return parse(text);
}

Word Word::prefix(std::size_t len) const { return Word(text_.substr(0, len)); }

Word Word::append(int letter) const {
  Word w(*this);
  w.text_.push_back(static_cast<char>('0' + letter));
  return w;
}

Word operator+(const Word& a, const Word& b) { return Word(a.text_ + b.text_); }

int distinct_letters(std::string_view text) {
  unsigned mask = 0;
  for (char c : text) mask |= 1u << (c - '1');
  return std::popcount(mask);
}

bool is_prefix(const Word& tau, const Word& sigma) {
  return tau.size() < sigma.size() &&
         sigma.str().compare(0, tau.size(), tau.str()) == 0;
}

namespace {

std::size_t common_prefix_len(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

bool constant_from(std::string_view s, std::size_t from, char letter) {
  for (std::size_t i = from; i < s.size(); ++i) {
    if (s[i] != letter) return false;
  }
  return true;
}

// Length of the maximal suffix containing at most two distinct letters.
std::size_t max_two_letter_suffix(std::string_view s) {
  unsigned mask = 0;
  std::size_t i = s.size();
  while (i > 0) {
    const unsigned m = mask | (1u << (s[i - 1] - '1'));
    if (std::popcount(m) > 2) break;
    mask = m;
    --i;
  }
  return s.size() - i;
}

}  // namespace

bool are_neighbors(const Word& a, const Word& b) {
  if (a == b) return false;
  const std::size_t p = common_prefix_len(a.str(), b.str());
  std::string_view ra{a.str()};
  std::string_view rb{b.str()};
  ra.remove_prefix(p);
  rb.remove_prefix(p);
  if (ra.empty() || rb.empty()) {
    // Case 1: one word extends the other.
    return distinct_letters(ra.empty() ? rb : ra) <= 2;
  }
  // Case 2: remainders i j^k and j i^k' with i, j the (distinct) first
  // letters.
  return constant_from(ra, 1, rb[0]) && constant_from(rb, 1, ra[0]);
}

Word f_map(const Word& w) {
  if (w.empty()) throw std::domain_error("f undefined on empty word");
  return w.prefix(w.size() - max_two_letter_suffix(w.str()));
}

std::size_t omega_str(std::string_view s) {
  std::size_t blocks = 0;
  std::size_t i = s.size();
  while (i > 0) {
    unsigned mask = 0;
    while (i > 0) {
      const unsigned m = mask | (1u << (s[i - 1] - '1'));
      if (std::popcount(m) > 2) break;
      mask = m;
      --i;
    }
    ++blocks;
  }
  return blocks;
}

std::size_t omega(const Word& w) { return omega_str(w.str()); }

std::size_t l_value(const Word& w) { return w.empty() ? 0 : omega(w) - 1; }

NormalDecomposition normal_decomposition(const Word& w) {
  if (w.empty()) {
    throw std::domain_error("normal decomposition undefined on empty word");
  }
  const std::string& s = w.str();
  std::vector<std::size_t> starts;  // block starts, discovered right to left
  std::size_t i = s.size();
  while (i > 0) {
    unsigned mask = 0;
    while (i > 0) {
      const unsigned m = mask | (1u << (s[i - 1] - '1'));
      if (std::popcount(m) > 2) break;
      mask = m;
      --i;
    }
    starts.push_back(i);
  }
  NormalDecomposition d;
  d.blocks.reserve(starts.size());
  for (std::size_t j = starts.size(); j-- > 0;) {
    const std::size_t begin = starts[j];
    const std::size_t end = (j == 0) ? s.size() : starts[j - 1];
    d.blocks.push_back(Word::parse(std::string_view{s}.substr(begin, end - begin)));
  }
  return d;
}

}  // namespace sgnet
