/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"

namespace sgnet {

GasketTriangle triangle_of(const Word& w, int t) {
  if (t < 0 || t > 62) throw std::invalid_argument("scale exponent out of range");
  if (static_cast<int>(w.size()) > t) {
    throw OutOfRange("scale too coarse: word length " + std::to_string(w.size()) +
                     " exceeds t = " + std::to_string(t));
  }
  const std::int64_t s = std::int64_t{1} << t;
  GasketTriangle tri;
  tri.word = w;
  tri.scale_exponent = t;
  tri.v = {LatticePoint{0, 0}, LatticePoint{s, 0}, LatticePoint{0, s}};
  const LatticePoint anchors[3] = {{0, 0}, {s, 0}, {0, s}};
  // T_sigma = T_{i_1} o ... o T_{i_k}: innermost (rightmost) letter first.
  for (std::size_t k = w.size(); k-- > 0;) {
    const LatticePoint& a = anchors[w.letter(k) - 1];
    for (auto& p : tri.v) {
      p.x = (p.x + a.x) / 2;  // exact: all coordinates divisible by the
      p.y = (p.y + a.y) / 2;  // remaining power of two
    }
  }
  return tri;
}

int orientation(LatticePoint a, LatticePoint b, LatticePoint c) {
  const __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return cross > 0 ? 1 : cross < 0 ? -1 : 0;
}

namespace {

// p assumed collinear with [a, b].
bool on_segment(LatticePoint a, LatticePoint b, LatticePoint p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(LatticePoint p1, LatticePoint p2, LatticePoint q1,
                        LatticePoint q2) {
  const int d1 = orientation(q1, q2, p1);
  const int d2 = orientation(q1, q2, p2);
  const int d3 = orientation(p1, p2, q1);
  const int d4 = orientation(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

bool boundaries_touch(const GasketTriangle& a, const GasketTriangle& b) {
  if (a.scale_exponent != b.scale_exponent) {
    throw std::invalid_argument("mismatched scales: " +
                                std::to_string(a.scale_exponent) + " vs " +
                                std::to_string(b.scale_exponent));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (segments_intersect(a.v[i], a.v[(i + 1) % 3], b.v[j], b.v[(j + 1) % 3])) {
        return true;
      }
    }
  }
  return false;
}

bool triangle_contains(const GasketTriangle& tri, LatticePoint p) {
  // Vertices are counter-clockwise (the base triangle is and homotheties
  // preserve orientation).
  return orientation(tri.v[0], tri.v[1], p) >= 0 &&
         orientation(tri.v[1], tri.v[2], p) >= 0 &&
         orientation(tri.v[2], tri.v[0], p) >= 0;
}

}  // namespace sgnet
