#pragma once

#include <cstddef>
#include <vector>

#include "axbc/elimination.hpp"
#include "axbc/matrix.hpp"
#include "axbc/problem.hpp"
#include "axbc/rank_normalization.hpp"

namespace fixtures {

using axbc::Matrix;

// Worked example: rank-2 A (5x3) and B (4x5).
inline Matrix example_a() {
  return {{0, 0, 0}, {1, -3, 2}, {2, 1, -1}, {-1, -4, 3}, {3, -2, 1}};
}

inline Matrix example_b() {
  return {{0, 1, 2, 3, -1}, {0, 3, 1, 4, 2}, {0, 4, 1, 5, 3}, {0, 2, 3, 5, -1}};
}

inline Matrix example_c_consistent() {
  return {{0, 0, 0, 0, 0},
          {0, 1, 0, 1, 1},
          {0, -2, 2, 0, -4},
          {0, 3, -2, 1, 5},
          {0, -1, 2, 1, -3}};
}

inline Matrix example_c_inconsistent() { return example_c_consistent().with(2, 4, 4); }

inline Matrix example_c1() { return {{1, 0}, {-2, 2}}; }

// Row permutation e2, e3, e4, e5, e1 for A.
inline Matrix example_t_ar() {
  const std::vector<std::size_t> order{1, 2, 3, 4, 0};
  return axbc::permutation_matrix(order);
}

// Column permutation for B: hatted columns are B columns 2, 3, 1, 4, 5.
inline Matrix example_t_bc() {
  return {{0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
}

inline axbc::PermutationOverride example_override_a() {
  return {example_t_ar(), Matrix::identity(3)};
}

inline axbc::PermutationOverride example_override_b() {
  return {Matrix::identity(4), example_t_bc()};
}

inline axbc::ProblemInstance example_instance(bool consistent) {
  return {example_a(), example_b(),
          consistent ? example_c_consistent() : example_c_inconsistent()};
}

}  // namespace fixtures
