/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sgnet {

// A finite word over the alphabet {1,2,3}. Words code the subtriangles of
// the gasket; the empty word codes the whole triangle and is the network
// root. Letters are stored as ASCII digits so words are cheap to hash,
// compare and print.
class Word {
 public:
  Word() = default;

  // Parses a string of digits 1-3. Throws std::invalid_argument otherwise.
  static Word parse(std::string_view text);
  // CLI spelling: "-" denotes the empty word.
  static Word parse_cli(std::string_view text);

  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }

  // Letter value in 1..3.
  int letter(std::size_t i) const { return text_[i] - '0'; }

  const std::string& str() const { return text_; }
  std::string cli_str() const { return text_.empty() ? "-" : text_; }

  Word prefix(std::size_t len) const;
  Word append(int letter) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::string s) : text_(std::move(s)) {}
  std::string text_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string>{}(w.str());
  }
};

// Block factorization sigma = tau_1 ... tau_l induced by iterating the
// f-map; l equals omega(sigma).
struct NormalDecomposition {
  std::vector<Word> blocks;
  std::size_t block_count() const { return blocks.size(); }
};

// Number of distinct letters appearing (0..3).
int distinct_letters(std::string_view text);

// True iff tau is a strict prefix of sigma.
bool is_prefix(const Word& tau, const Word& sigma);

// Combinatorial neighbor test: strip the longest common prefix; the words
// are neighbors iff either one remainder is empty and the other uses at
// most two distinct letters, or the remainders read i j^k and j i^k'.
// Equal words are not neighbors.
bool are_neighbors(const Word& a, const Word& b);

// Removes the maximal suffix containing at most two distinct letters; the
// result is the nearest strict prefix that is still a neighbor. Throws
// std::domain_error on the empty word.
Word f_map(const Word& w);

// Number of f-iterations until the empty word; omega of the empty word is 0.
std::size_t omega(const Word& w);
// Same, over a raw digit string (hot loops avoid Word construction).
std::size_t omega_str(std::string_view letters);

// omega(w) - 1 for nonempty w, 0 for the empty word.
std::size_t l_value(const Word& w);

// The unique block decomposition, by a right-to-left greedy scan: a letter
// that would introduce a third distinct letter terminates the block. Throws
// std::domain_error on the empty word.
NormalDecomposition normal_decomposition(const Word& w);

}  // namespace sgnet
