/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>

namespace sgnet {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based stream generator: sample i under a seed draws from its own
// splitmix64 sequence, so results depend only on (seed, i) and never on how
// samples are sharded over workers.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream)
      : state_(splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ull))) {}

  std::uint64_t next() { return splitmix64(state_ += 0x9E3779B97F4A7C15ull); }

  unsigned __int128 next_u128() {
    const auto hi = static_cast<unsigned __int128>(next());
    return (hi << 64) | next();
  }

  // Uniform draw in [0, bound) by rejection; exact, no modulo bias.
  unsigned __int128 next_below(unsigned __int128 bound) {
    const unsigned __int128 all = ~static_cast<unsigned __int128>(0);
    const unsigned __int128 limit = all - all % bound;
    unsigned __int128 r;
    do {
      r = next_u128();
    } while (r >= limit);
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sgnet
