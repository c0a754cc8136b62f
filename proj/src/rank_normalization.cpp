#include "axbc/rank_normalization.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "axbc/elimination.hpp"

namespace axbc {
namespace {

// Selected indices first (in given order), then the rest ascending.
std::vector<std::size_t> leading_order(const std::vector<std::size_t>& selected, std::size_t n) {
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> order = selected;
  for (std::size_t s : selected) taken[s] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) order.push_back(i);
  }
  return order;
}

HatDecomposition decompose_with_orders(const Matrix& m, std::vector<std::size_t> row_order,
                                       std::vector<std::size_t> col_order, std::size_t a) {
  HatDecomposition h;
  h.rank = a;
  h.t_rows = permutation_matrix(row_order);
  h.t_cols = permutation_matrix(col_order).transpose();
  h.hatted = h.t_rows * m * h.t_cols;
  h.row_order = std::move(row_order);
  h.col_order = std::move(col_order);

  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const Matrix w = h.hatted.block(0, 0, a, a);
  const auto w_inv = inverse(w);
  if (!w_inv) {
    throw std::invalid_argument("leading " + std::to_string(a) + "x" + std::to_string(a) +
                                " block of the permuted matrix is singular");
  }
  // Trailing rows lie in the span of the leading ones, and the leading
  // columns of that span are W, so the coefficients are fixed by W alone.
  h.row_coeffs = h.hatted.block(a, 0, rows - a, a) * *w_inv;
  h.col_coeffs = *w_inv * h.hatted.block(0, a, a, cols - a);

  const Matrix top = h.hatted.block(0, 0, a, cols);
  const Matrix left = h.hatted.block(0, 0, rows, a);
  if (h.row_coeffs * top != h.hatted.block(a, 0, rows - a, cols) ||
      left * h.col_coeffs != h.hatted.block(0, a, rows, cols - a)) {
    throw std::invalid_argument("permuted matrix does not have its independent rows and columns "
                                "at the leading positions");
  }
  return h;
}

}  // namespace

Matrix rank_normal_form(std::size_t rows, std::size_t cols, std::size_t rank) {
  return Matrix::generate(rows, cols, [rank](std::size_t i, std::size_t j) {
    return Rational(i == j && i < rank ? 1 : 0);
  });
}

HatDecomposition hat_decompose(const Matrix& m) {
  // Pivot columns of an RREF are exactly the greedy first-come independent
  // columns; on the transpose they are the greedy independent rows.
  const EliminationResult by_rows = eliminate(m.transpose());
  const EliminationResult by_cols = eliminate(m);
  return decompose_with_orders(m, leading_order(by_rows.pivot_columns, m.rows()),
                               leading_order(by_cols.pivot_columns, m.cols()), by_cols.rank);
}

HatDecomposition hat_decompose(const Matrix& m, const PermutationOverride& perms) {
  if (perms.t_rows.rows() != m.rows() || perms.t_cols.rows() != m.cols()) {
    throw std::invalid_argument("permutation override shapes " + perms.t_rows.shape_string() +
                                ", " + perms.t_cols.shape_string() + " do not fit " +
                                m.shape_string());
  }
  auto row_order = permutation_of(perms.t_rows);
  auto col_order = permutation_of(perms.t_cols.transpose());
  if (!row_order || !col_order) {
    throw std::invalid_argument("permutation override is not a permutation matrix");
  }
  return decompose_with_orders(m, std::move(*row_order), std::move(*col_order), rank(m));
}

StructuredTransforms structured_transforms(const HatDecomposition& h, TransformStyle style) {
  const std::size_t a = h.rank;
  const std::size_t rows = h.hatted.rows();
  const std::size_t cols = h.hatted.cols();
  StructuredTransforms st;
  st.style = style;
  st.w_block = h.hatted.block(0, 0, a, a);
  st.row_l_block = -h.row_coeffs;
  st.col_l_block = -h.col_coeffs;
  const auto w_inv = inverse(st.w_block);
  assert(w_inv && "hat decomposition invariant: leading block invertible");
  if (!w_inv) throw std::logic_error("singular leading block in hat decomposition");

  const Matrix top_right_zero = Matrix::zero(a, rows - a);
  const Matrix bottom_left_zero = Matrix::zero(cols - a, a);
  if (style == TransformStyle::kRow) {
    st.q_hat = Matrix::from_blocks(Matrix::identity(a), top_right_zero, st.row_l_block,
                                   Matrix::identity(rows - a));
    st.p_hat = Matrix::from_blocks(*w_inv, st.col_l_block, bottom_left_zero,
                                   Matrix::identity(cols - a));
  } else {
    st.q_hat = Matrix::from_blocks(*w_inv, top_right_zero, st.row_l_block,
                                   Matrix::identity(rows - a));
    st.p_hat = Matrix::from_blocks(Matrix::identity(a), st.col_l_block, bottom_left_zero,
                                   Matrix::identity(cols - a));
  }
  return st;
}

RankNormalization normalize(const HatDecomposition& h, TransformStyle style) {
  const StructuredTransforms st = structured_transforms(h, style);
  return {st.q_hat * h.t_rows, h.t_cols * st.p_hat, h.rank};
}

RankNormalization normalize(const Matrix& m, TransformStyle style) {
  return normalize(hat_decompose(m), style);
}

}  // namespace axbc
