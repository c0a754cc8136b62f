#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "axbc/matrix.hpp"
#include "axbc/problem.hpp"

namespace axbc {

/// Seeded generator of small integer matrices and A X B = C instances, shared
/// by the tests, the acceptance suite and `axbc selfcheck`.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  std::size_t dimension(std::size_t lo, std::size_t hi);
  bool coin();
  Rational entry(int lo = -3, int hi = 3);
  Matrix matrix(std::size_t rows, std::size_t cols, int lo = -3, int hi = 3);

  /// Random matrix of exactly the requested rank (<= min(rows, cols)), built
  /// as a product of rows x rank and rank x cols factors.
  Matrix matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t rank);

  /// Rank strictly below min(rows, cols) when both are positive; zero rank
  /// for empty shapes.
  Matrix deficient_matrix(std::size_t rows, std::size_t cols);

  /// Dimensions in [1, max_dim]. With `deficient` both A and B lose rank.
  /// With `consistent`, C = A X* B for a random X*; otherwise C is random
  /// (which may still happen to be consistent).
  ProblemInstance instance(std::size_t max_dim, bool deficient, bool consistent);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace axbc
