#include "axbc/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace axbc {
namespace {

[[noreturn]] void shape_mismatch(const char* op, const Matrix& lhs, const Matrix& rhs) {
  throw DimensionError(std::string(op) + ": shape mismatch " + lhs.shape_string() + " vs " +
                       rhs.shape_string());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix " + shape_string() + " needs " + std::to_string(rows_ * cols_) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  return generate(n, n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
}

Matrix Matrix::column(std::vector<Rational> entries) {
  const std::size_t n = entries.size();
  return {n, 1, std::move(entries)};
}

Matrix Matrix::from_blocks(const Matrix& top_left, const Matrix& top_right,
                           const Matrix& bottom_left, const Matrix& bottom_right) {
  return vstack(hstack(top_left, top_right), hstack(bottom_left, bottom_right));
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) shape_mismatch("hstack", left, right);
  return generate(left.rows_, left.cols_ + right.cols_, [&](std::size_t i, std::size_t j) {
    return j < left.cols_ ? left(i, j) : right(i, j - left.cols_);
  });
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) shape_mismatch("vstack", top, bottom);
  return generate(top.rows_ + bottom.rows_, top.cols_, [&](std::size_t i, std::size_t j) {
    return i < top.rows_ ? top(i, j) : bottom(i - top.rows_, j);
  });
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::string Matrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + shape_string());
  }
  return (*this)(i, j);
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw DimensionError("block " + std::to_string(nrows) + "x" + std::to_string(ncols) + " at (" +
                         std::to_string(row0) + "," + std::to_string(col0) + ") outside " +
                         shape_string());
  }
  return generate(nrows, ncols,
                  [&](std::size_t i, std::size_t j) { return (*this)(row0 + i, col0 + j); });
}

Matrix Matrix::transpose() const {
  return generate(cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
}

Rational Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square " + shape_string());
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::with(std::size_t i, std::size_t j, Rational value) const {
  at(i, j);
  Matrix copy = *this;
  copy.entries_[i * cols_ + j] = std::move(value);
  return copy;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) shape_mismatch("add", lhs, rhs);
  Matrix out = lhs;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
  return out;
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) shape_mismatch("subtract", lhs, rhs);
  Matrix out = lhs;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
  return out;
}

Matrix operator-(const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

Matrix mat_mul(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) shape_mismatch("multiply", lhs, rhs);
  const std::size_t n = lhs.rows();
  const std::size_t inner = lhs.cols();
  const std::size_t m = rhs.cols();
  std::vector<Rational> out(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!rhs(k, j).is_zero()) out[i * m + j] += a * rhs(k, j);
      }
    }
  }
  return {n, m, std::move(out)};
}

Matrix kronecker(const Matrix& lhs, const Matrix& rhs) {
  return Matrix::generate(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols(),
                          [&](std::size_t i, std::size_t j) {
                            return lhs(i / rhs.rows(), j / rhs.cols()) *
                                   rhs(i % rhs.rows(), j % rhs.cols());
                          });
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j == 0 ? "" : ", ") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace axbc
