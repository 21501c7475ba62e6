#pragma once

// Explicit maps used by several suites, written as lists of images
// delta(b_j) = sum c_k b_k.

#include <utility>
#include <vector>

#include "lieaid/derivations.hpp"

namespace fixture {

using lieaid::Field;
using lieaid::Matrix;
using lieaid::Scalar;

struct Image {
  std::size_t j;
  std::vector<std::pair<std::size_t, long>> terms;
};

inline Matrix map_from_images(Field f, std::size_t n, const std::vector<Image>& images) {
  Matrix d(f, n, n);
  for (const auto& im : images)
    for (auto [k, c] : im.terms) d(im.j - 1, k - 1) += Scalar(f, c);
  return d;
}

// Two non-commuting almost-inner derivations of g3 over GF(3).
inline Matrix g3_d1() {
  return map_from_images(Field::parse("GF(3)"), 15,
                         {{2, {{7, 1}}},
                          {3, {{7, 2}, {8, 1}}},
                          {4, {{11, 2}, {12, 2}}},
                          {5, {{10, 2}}},
                          {6, {{10, 1}}},
                          {10, {{14, 1}}},
                          {11, {{13, 1}}},
                          {12, {{13, 2}}}});
}

inline Matrix g3_d2() {
  return map_from_images(Field::parse("GF(3)"), 15,
                         {{2, {{10, 1}}}, {7, {{13, 1}}}, {8, {{13, 1}}}, {9, {{13, 2}, {14, 2}}}});
}

// g6_23: delta_1 sends b1 to -b3 and fixes nothing else, delta_2 sends b2 to
// -b5. Both are derivations acting like the right-hand side (-d1 z1, -d2 z2, 0).
inline Matrix g623_delta1() { return map_from_images(Field::rational(), 6, {{1, {{3, -1}}}}); }
inline Matrix g623_delta2() { return map_from_images(Field::rational(), 6, {{2, {{5, -1}}}}); }

}  // namespace fixture
