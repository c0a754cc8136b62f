#pragma once

// Brute-force ground truth for every linear matrix equation in the library.
// Unknown X (rows x cols) is flattened row-major: X(k, l) -> k * cols + l.
// Only exact-core elimination is used here, never the solver's
// factorizations, so the oracle stays an independent check.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "axbc/matrix.hpp"
#include "axbc/problem.hpp"
#include "axbc/systems.hpp"

namespace axbc::oracle {

struct VectorizedSystem {
  Matrix coefficient;  ///< constraints x (unknown_rows * unknown_cols)
  Matrix rhs;          ///< constraints x 1
  std::size_t unknown_rows = 0;
  std::size_t unknown_cols = 0;
};

/// scale * left * X * right
struct LinearTerm {
  Rational scale;
  Matrix left;
  Matrix right;
};

/// sum of terms == rhs, one constraint per entry of rhs (row-major).
VectorizedSystem vectorize_terms(std::span<const LinearTerm> terms, const Matrix& rhs,
                                 std::size_t unknown_rows, std::size_t unknown_cols);

/// Row for output (i, j) holds A(i,k) B(l,j) at column k * p + l.
VectorizedSystem vectorize_axbc(const ProblemInstance& inst);

/// Vertical concatenation. Throws DimensionError on differing unknown shapes
/// or an empty sequence.
VectorizedSystem stack(std::span<const VectorizedSystem> systems);

VectorizedSystem vectorize_common_system(const CommonSolutionSystem& sys);
VectorizedSystem vectorize_commuting_system(const CommutingSystem& sys);

struct OracleSolution {
  Matrix particular;           ///< free variables zero, reshaped to the unknown
  std::vector<Matrix> kernel;  ///< reshaped kernel basis
};

/// nullopt iff rank(coefficient) < rank([coefficient | rhs]).
std::optional<OracleSolution> oracle_solve(const VectorizedSystem& sys);

Matrix flatten(const Matrix& m);
Matrix reshape(const Matrix& column, std::size_t rows, std::size_t cols);

}  // namespace axbc::oracle
