#pragma once

#include <cstddef>

#include "axbc/matrix.hpp"

namespace axbc {

/// X(Y) = x0 + Lin(Y), with Lin one of two idempotent linear maps built from a
/// projector pair (L, R):
///
///   kSandwich:  Lin(Y) = Y - L Y R              (the A X B = C family,
///                                               L = A(1)A, R = B B(1))
///   kProjected: Lin(Y) = (I - L) Y (I - R)      (the two-equation systems)
///
/// Lin is idempotent whenever L and R are, which makes
/// X(X(Y)) == X(Y) for all Y equivalent to Lin(x0) == 0.
class AffineSolutionFamily {
 public:
  enum class Form { kSandwich, kProjected };

  AffineSolutionFamily(Matrix x0, Matrix left_proj, Matrix right_proj, Form form);

  [[nodiscard]] const Matrix& x0() const { return x0_; }
  [[nodiscard]] const Matrix& left_proj() const { return left_; }
  [[nodiscard]] const Matrix& right_proj() const { return right_; }
  [[nodiscard]] Form form() const { return form_; }

  [[nodiscard]] Matrix linear_part(const Matrix& y) const;
  [[nodiscard]] Matrix materialize(const Matrix& y) const { return x0_ + linear_part(y); }

  /// Same linear part around a different particular solution.
  [[nodiscard]] AffineSolutionFamily with_particular(Matrix x0) const;

  /// Closed-form reproductivity: X(X(Y)) - X(Y) == Lin(x0) for every Y.
  [[nodiscard]] bool is_reproductive() const { return linear_part(x0_).is_zero(); }

  /// Dimension of the image of Lin, i.e. the number of independent
  /// parameters. Lin is idempotent, so its rank equals its trace:
  /// n p - tr(L) tr(R) for kSandwich, tr(I - L) tr(I - R) for kProjected.
  [[nodiscard]] std::size_t free_parameter_count() const;

  [[nodiscard]] bool projectors_idempotent() const;

 private:
  Matrix x0_;
  Matrix left_;
  Matrix right_;
  Form form_;
};

}  // namespace axbc
