#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "axbc/matrix.hpp"

namespace axbc {

/// A X B = C with A m x n, B p x q, C m x q; the unknown X is n x p.
struct ProblemInstance {
  Matrix a;
  Matrix b;
  Matrix c;

  /// Throws DimensionError when the shapes do not conform.
  void validate() const;
  [[nodiscard]] std::size_t unknown_rows() const { return a.cols(); }
  [[nodiscard]] std::size_t unknown_cols() const { return b.rows(); }
};

/// The equation has no solution. Carries the witness residual
/// A A(1) C B(1) B - C (nonzero entries locate the violations).
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, Matrix residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  [[nodiscard]] const Matrix& residual() const { return residual_; }

 private:
  Matrix residual_;
};

/// A candidate particular solution does not solve its equation. Carries
/// A X0 B - C.
class NotASolutionError : public std::invalid_argument {
 public:
  NotASolutionError(const std::string& what, Matrix residual)
      : std::invalid_argument(what), residual_(std::move(residual)) {}
  [[nodiscard]] const Matrix& residual() const { return residual_; }

 private:
  Matrix residual_;
};

/// A matrix system has no common solution. Names every failed criterion.
class SystemInconsistent : public std::runtime_error {
 public:
  SystemInconsistent(const std::string& what, std::vector<std::string> failed)
      : std::runtime_error(what), failed_(std::move(failed)) {}
  [[nodiscard]] const std::vector<std::string>& failed_criteria() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace axbc
