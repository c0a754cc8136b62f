#include "axbc/elimination.hpp"

#include <stdexcept>
#include <utility>

namespace axbc {
namespace {

// Mutable row-major scratch grid used only inside this translation unit.
struct Grid {
  std::size_t rows;
  std::size_t cols;
  std::vector<Rational> data;

  explicit Grid(const Matrix& m)
      : rows(m.rows()), cols(m.cols()), data(m.entries().begin(), m.entries().end()) {}

  Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
  }
  void scale_row(std::size_t r, const Rational& s) {
    for (std::size_t j = 0; j < cols; ++j) at(r, j) *= s;
  }
  // row[target] -= factor * row[source]
  void subtract_row(std::size_t target, std::size_t source, const Rational& factor) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!at(source, j).is_zero()) at(target, j) -= factor * at(source, j);
    }
  }
  Matrix freeze() && { return {rows, cols, std::move(data)}; }
};

}  // namespace

EliminationResult eliminate(const Matrix& m) {
  Grid work(m);
  Grid transform(Matrix::identity(m.rows()));
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && work.at(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      work.swap_rows(found, pivot_row);
      transform.swap_rows(found, pivot_row);
    }
    const Rational inv = Rational(1) / work.at(pivot_row, col);
    work.scale_row(pivot_row, inv);
    transform.scale_row(pivot_row, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || work.at(r, col).is_zero()) continue;
      const Rational factor = work.at(r, col);
      work.subtract_row(r, pivot_row, factor);
      transform.subtract_row(r, pivot_row, factor);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  const std::size_t r = pivots.size();
  return {std::move(work).freeze(), r, std::move(pivots), std::move(transform).freeze()};
}

std::size_t rank(const Matrix& m) { return eliminate(m).rank; }

namespace {

std::vector<Matrix> kernel_from(const EliminationResult& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < e.rank; ++k) v[e.pivot_columns[k]] = -e.rref(k, free);
    basis.push_back(Matrix::column(std::move(v)));
  }
  return basis;
}

}  // namespace

std::vector<Matrix> kernel_basis(const Matrix& m) { return kernel_from(eliminate(m), m.cols()); }

Matrix permutation_matrix(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation of 0..n-1");
    seen[p] = true;
  }
  return Matrix::generate(n, n,
                          [&](std::size_t i, std::size_t j) { return Rational(perm[i] == j ? 1 : 0); });
}

std::optional<std::vector<std::size_t>> permutation_of(const Matrix& t) {
  if (!t.is_square()) return std::nullopt;
  const std::size_t n = t.rows();
  std::vector<std::size_t> perm(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (t(i, j) == Rational(1)) {
        ++ones;
        perm[i] = j;
      } else if (!t(i, j).is_zero()) {
        return std::nullopt;
      }
    }
    if (ones != 1 || seen[perm[i]]) return std::nullopt;
    seen[perm[i]] = true;
  }
  return perm;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + m.shape_string());
  EliminationResult e = eliminate(m);
  if (e.rank != m.rows()) return std::nullopt;
  return std::move(e.row_transform);
}

std::optional<LinearSolution> solve_linear(const Matrix& coefficient, const Matrix& rhs) {
  if (rhs.cols() != 1 || rhs.rows() != coefficient.rows()) {
    throw DimensionError("solve_linear: coefficient " + coefficient.shape_string() + " vs rhs " +
                         rhs.shape_string());
  }
  const EliminationResult e = eliminate(coefficient);
  const Matrix reduced_rhs = e.row_transform * rhs;
  for (std::size_t r = e.rank; r < reduced_rhs.rows(); ++r) {
    if (!reduced_rhs(r, 0).is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(coefficient.cols());
  for (std::size_t k = 0; k < e.rank; ++k) x[e.pivot_columns[k]] = reduced_rhs(k, 0);
  return LinearSolution{Matrix::column(std::move(x)), kernel_from(e, coefficient.cols())};
}

}  // namespace axbc
