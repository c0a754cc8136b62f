#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axbc/matrix.hpp"
#include "axbc/rank_normalization.hpp"

namespace axbc {

/// Free blocks of G = P * [[I_a, x1], [x2, x3]] * Q.
struct OneInverseParams {
  Matrix x1;  ///< a x (m - a)
  Matrix x2;  ///< (n - a) x a
  Matrix x3;  ///< (n - a) x (m - a)
};

/// Every {1}-inverse of an m x n matrix A, parameterized through a rank
/// normalization Q A P = E_a. Each produced G is n x m and satisfies A G A = A
/// for every parameter choice; conversely every such G is produced.
class OneInverseFamily {
 public:
  OneInverseFamily(RankNormalization normalization, std::size_t a_rows, std::size_t a_cols);

  [[nodiscard]] const Matrix& p() const { return norm_.p; }
  [[nodiscard]] const Matrix& q() const { return norm_.q; }
  [[nodiscard]] std::size_t rank() const { return norm_.rank; }
  /// Shape of the produced inverses: (n, m).
  [[nodiscard]] std::size_t inverse_rows() const { return n_; }
  [[nodiscard]] std::size_t inverse_cols() const { return m_; }

  [[nodiscard]] OneInverseParams zero_params() const;
  /// Throws DimensionError when a block has the wrong shape.
  [[nodiscard]] Matrix materialize(const OneInverseParams& params) const;
  /// materialize(zero_params()).
  [[nodiscard]] Matrix default_inverse() const;

  /// Inverse map: the parameters that produce g, or nullopt when g is not a
  /// member (its transformed leading block is not I_a).
  [[nodiscard]] std::optional<OneInverseParams> recover_params(const Matrix& g) const;

 private:
  RankNormalization norm_;
  std::size_t n_;
  std::size_t m_;
};

OneInverseFamily one_inverse_family(const Matrix& a, TransformStyle style = TransformStyle::kRow);

/// True iff a * g * a == a. Throws DimensionError unless g is n x m for an
/// m x n a.
bool is_one_inverse(const Matrix& a, const Matrix& g);

/// The affine set of n x n matrices X with A X A = A and A X = X A.
struct CommutativeInverseSet {
  Matrix particular;           ///< free variables set to zero
  std::vector<Matrix> kernel;  ///< n x n directions spanning the set
};

/// Solves the stacked linear system vec(A X A) = vec(A), vec(A X - X A) = 0
/// in the n^2 entries of X. nullopt when no commutative {1}-inverse exists.
/// Throws DimensionError for non-square a.
std::optional<CommutativeInverseSet> commutative_one_inverse_set(const Matrix& a);

/// commutative_one_inverse_set(a)->particular, if any.
std::optional<Matrix> commutative_one_inverse(const Matrix& a);

}  // namespace axbc
