/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <cstdint>

#include "core/word.hpp"

namespace sgnet {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Subtriangle K_w in sheared integer coordinates. The affine change of basis
// sending the gasket corners to (0,0), (1,0), (0,1) turns every contraction
// into a pure homothety with rational coefficients, so at scale 2^t all
// vertices are exact integers and boundary incidence is unchanged (incidence
// is affine-invariant). No floating point anywhere.
struct GasketTriangle {
  Word word;
  int scale_exponent = 0;
  std::array<LatticePoint, 3> v{};  // images of the corners a1, a2, a3
};

// Exact coordinates of K_w at scale 2^t; maps compose left to right over the
// letters. Throws OutOfRange("scale too coarse") when |w| > t.
GasketTriangle triangle_of(const Word& w, int t);

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orientation(LatticePoint a, LatticePoint b, LatticePoint c);

// Closed segments; touching at a single point counts, collinear overlap counts.
bool segments_intersect(LatticePoint p1, LatticePoint p2, LatticePoint q1,
                        LatticePoint q2);

// The paper's edge relation: some side of a meets some side of b. Throws
// std::invalid_argument on mismatched scales.
bool boundaries_touch(const GasketTriangle& a, const GasketTriangle& b);

// Closed-triangle containment.
bool triangle_contains(const GasketTriangle& tri, LatticePoint p);

}  // namespace sgnet
