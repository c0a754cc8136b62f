#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "axbc/rational.hpp"

namespace axbc {

/// Raised when operand shapes do not conform. The message names both shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals. Values are immutable once
/// built; every operation returns a fresh matrix. Zero-extent shapes such as
/// 3x0 are legal and keep their row/column counts, so block algebra with
/// empty blocks composes without special cases.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);
  /// Column vector.
  static Matrix column(std::vector<Rational> entries);

  template <class Fn>
  static Matrix generate(std::size_t rows, std::size_t cols, Fn&& fn) {
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) entries.emplace_back(fn(i, j));
    }
    return {rows, cols, std::move(entries)};
  }

  /// Assembles [[top_left, top_right], [bottom_left, bottom_right]].
  static Matrix from_blocks(const Matrix& top_left, const Matrix& top_right,
                            const Matrix& bottom_left, const Matrix& bottom_right);
  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string shape_string() const;

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::span<const Rational> entries() const { return entries_; }

  [[nodiscard]] Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                             std::size_t ncols) const;
  [[nodiscard]] Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
  [[nodiscard]] Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Rational trace() const;

  /// Copy with one entry replaced.
  [[nodiscard]] Matrix with(std::size_t i, std::size_t j, Rational value) const;

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

  friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator-(const Matrix& m);
  friend Matrix operator*(const Rational& s, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product. Throws DimensionError when lhs.cols() != rhs.rows().
Matrix mat_mul(const Matrix& lhs, const Matrix& rhs);
inline Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return mat_mul(lhs, rhs); }

/// Kronecker product lhs (x) rhs.
Matrix kronecker(const Matrix& lhs, const Matrix& rhs);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace axbc
