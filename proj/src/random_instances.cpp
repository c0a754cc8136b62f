#include "axbc/random_instances.hpp"

#include <algorithm>
#include <stdexcept>

#include "axbc/elimination.hpp"

namespace axbc {

std::size_t InstanceGenerator::dimension(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

bool InstanceGenerator::coin() { return std::bernoulli_distribution(0.5)(engine_); }

Rational InstanceGenerator::entry(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Matrix InstanceGenerator::matrix(std::size_t rows, std::size_t cols, int lo, int hi) {
  return Matrix::generate(rows, cols, [&](std::size_t, std::size_t) { return entry(lo, hi); });
}

Matrix InstanceGenerator::matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t r) {
  if (r > std::min(rows, cols)) throw std::invalid_argument("requested rank exceeds shape");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m = matrix(rows, r, -2, 2) * matrix(r, cols, -2, 2);
    if (rank(m) == r) return m;
  }
  throw std::runtime_error("could not hit requested rank");
}

Matrix InstanceGenerator::deficient_matrix(std::size_t rows, std::size_t cols) {
  const std::size_t full = std::min(rows, cols);
  if (full == 0) return Matrix::zero(rows, cols);
  return matrix_of_rank(rows, cols, dimension(0, full - 1));
}

ProblemInstance InstanceGenerator::instance(std::size_t max_dim, bool deficient, bool consistent) {
  const std::size_t m = dimension(1, max_dim);
  const std::size_t n = dimension(1, max_dim);
  const std::size_t p = dimension(1, max_dim);
  const std::size_t q = dimension(1, max_dim);
  Matrix a = deficient ? deficient_matrix(m, n) : matrix_of_rank(m, n, std::min(m, n));
  Matrix b = deficient ? deficient_matrix(p, q) : matrix_of_rank(p, q, std::min(p, q));
  Matrix c = consistent ? a * matrix(n, p) * b : matrix(m, q);
  return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace axbc
