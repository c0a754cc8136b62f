#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axbc/matrix.hpp"

namespace axbc {

/// Block normal form E_a = [[I_a, 0], [0, 0]] of shape rows x cols.
Matrix rank_normal_form(std::size_t rows, std::size_t cols, std::size_t rank);

/// Regular q (m x m) and p (n x n) with q * M * p == E_a, a = rank(M).
struct RankNormalization {
  Matrix q;
  Matrix p;
  std::size_t rank = 0;
};

/// Row and column permutations that bring a basis of independent rows and
/// columns to the leading positions, plus the coefficients expressing every
/// trailing row/column through the leading ones.
///
///   hatted = t_rows * M * t_cols
///   hatted.row(i) = sum_l row_coeffs(i - a, l) * hatted.row(l)   for i >= a
///   hatted.col(j) = sum_k col_coeffs(k, j - a) * hatted.col(k)   for j >= a
///
/// The leading a x a block of hatted is invertible.
struct HatDecomposition {
  Matrix t_rows;
  Matrix t_cols;
  Matrix hatted;
  std::size_t rank = 0;
  Matrix row_coeffs;  ///< (m - a) x a
  Matrix col_coeffs;  ///< a x (n - a)
  std::vector<std::size_t> row_order;  ///< hatted row i is M row row_order[i]
  std::vector<std::size_t> col_order;  ///< hatted col j is M col col_order[j]
};

/// Explicit permutation matrices, used in place of the greedy choice.
/// hatted = t_rows * M * t_cols.
struct PermutationOverride {
  Matrix t_rows;
  Matrix t_cols;
};

/// Greedy choice: the first rows (top-down) that raise the rank are moved to
/// the front in their original order; the remaining rows follow in original
/// order. Columns are chosen the same way.
HatDecomposition hat_decompose(const Matrix& m);

/// Uses the supplied permutations. Throws std::invalid_argument when either is
/// not a permutation matrix of the right size, or when the leading
/// rank(m) x rank(m) block of the permuted matrix is singular.
HatDecomposition hat_decompose(const Matrix& m, const PermutationOverride& perms);

/// Which of the two structured transform templates to build.
///   kRow:    q_hat = [[I_a, 0], [L, I]],     p_hat = [[W^-1, L'], [0, I]]
///   kColumn: q_hat = [[W^-1, 0], [L', I]],   p_hat = [[I_a, L], [0, I]]
/// L-blocks are the negated dependency coefficients. Both satisfy
/// q_hat * hatted * p_hat == E_a.
enum class TransformStyle { kRow, kColumn };

struct StructuredTransforms {
  TransformStyle style = TransformStyle::kRow;
  Matrix q_hat;
  Matrix p_hat;
  Matrix w_block;     ///< leading a x a block of hatted
  Matrix row_l_block; ///< -row_coeffs, (m - a) x a
  Matrix col_l_block; ///< -col_coeffs, a x (n - a)
};

StructuredTransforms structured_transforms(const HatDecomposition& h, TransformStyle style);

/// q = q_hat * t_rows and p = t_cols * p_hat, so q * M * p == E_a.
RankNormalization normalize(const HatDecomposition& h, TransformStyle style);
RankNormalization normalize(const Matrix& m, TransformStyle style = TransformStyle::kRow);

}  // namespace axbc
