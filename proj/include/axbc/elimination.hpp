#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "axbc/matrix.hpp"

namespace axbc {

struct EliminationResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  /// Regular matrix with row_transform * input == rref.
  Matrix row_transform;
};

/// Gauss-Jordan elimination to reduced row-echelon form. Columns are scanned
/// left to right; the pivot is the first nonzero entry at or below the current
/// pivot row. Deterministic: equal inputs give identical results.
EliminationResult eliminate(const Matrix& m);

std::size_t rank(const Matrix& m);

/// cols(m) - rank(m) independent column vectors spanning {v : m v = 0}. One
/// vector per free column f, with v[f] = 1 and zeros at the other free columns.
std::vector<Matrix> kernel_basis(const Matrix& m);

/// Square 0/1 matrix T with (T * M).row(i) == M.row(perm[i]).
/// Throws std::invalid_argument if perm is not a permutation of 0..n-1.
Matrix permutation_matrix(std::span<const std::size_t> perm);

/// Recovers perm from a permutation matrix; nullopt if t is not one.
std::optional<std::vector<std::size_t>> permutation_of(const Matrix& t);

/// Exact inverse, or nullopt when m is singular. Throws DimensionError for a
/// non-square input.
std::optional<Matrix> inverse(const Matrix& m);

/// Affine solution set of coefficient * x = rhs for a column rhs.
struct LinearSolution {
  Matrix particular;           ///< free variables set to zero
  std::vector<Matrix> kernel;  ///< kernel_basis(coefficient)
};

std::optional<LinearSolution> solve_linear(const Matrix& coefficient, const Matrix& rhs);

}  // namespace axbc
