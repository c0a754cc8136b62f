#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axbc/matrix.hpp"
#include "axbc/one_inverse.hpp"
#include "axbc/problem.hpp"
#include "axbc/rank_normalization.hpp"
#include "axbc/solution_family.hpp"

namespace axbc {

/// Explicit permutations for the hatted forms of A and B. Unset members fall
/// back to the greedy choice.
struct HatOverrides {
  std::optional<PermutationOverride> a;
  std::optional<PermutationOverride> b;
};

/// Everything derived from A and B alone. A uses the row-style structured
/// normalization, B the column-style one; the default {1}-inverses are the
/// zero-parameter members of the resulting families.
struct EquationFactors {
  HatDecomposition hat_a;
  HatDecomposition hat_b;
  RankNormalization norm_a;
  RankNormalization norm_b;
  OneInverseFamily family_a;
  OneInverseFamily family_b;
  Matrix default_a_inverse;
  Matrix default_b_inverse;
};

EquationFactors factorize(const Matrix& a, const Matrix& b, const HatOverrides& overrides = {});

/// A G_A C G_B B - C.
Matrix penrose_residual(const ProblemInstance& inst, const Matrix& a_inverse,
                        const Matrix& b_inverse);

/// Penrose's test A A(1) C B(1) B == C with the default {1}-inverses. The
/// verdict does not depend on which {1}-inverses are used.
bool penrose_consistent(const ProblemInstance& inst);
bool penrose_consistent(const ProblemInstance& inst, const Matrix& a_inverse,
                        const Matrix& b_inverse);

/// One broken relation of the hatted right-hand side C^ = T_Ar C T_Bc.
struct StructuredViolation {
  enum class Relation { kDependentRow, kDependentColumn, kDoublyDependent };
  Relation relation;
  std::size_t hatted_row;
  std::size_t hatted_col;
  std::size_t row;  ///< position in the original C
  std::size_t col;
  Rational expected;
  Rational actual;
};

/// Checks the three relation groups that make C^ consistent:
///   dependent rows     c(i,j) = sum_l alpha(i,l) c(l,j)                 i >= a, j < b
///   dependent columns  c(i,j) = sum_k beta(k,j) c(i,k)                  i < a,  j >= b
///   both               c(i,j) = sum_l sum_k alpha(i,l) beta(k,j) c(l,k) i >= a, j >= b
/// where alpha are A^'s row coefficients and beta are B^'s column
/// coefficients. Returns every violated entry, row-major over C^.
std::vector<StructuredViolation> structured_violations(const ProblemInstance& inst,
                                                       const HatOverrides& overrides = {});
bool structured_consistent(const ProblemInstance& inst, const HatOverrides& overrides = {});

/// Builds C^ = [[C1, C1 beta], [alpha C1, alpha C1 beta]] from the free
/// rank(A) x rank(B) block C1 and returns C = T_Ar^-1 C^ T_Bc^-1. Every
/// result admits a solution. Throws DimensionError for a wrong c1 shape.
Matrix build_consistent_c(const Matrix& a, const Matrix& b, const Matrix& c1,
                          const HatOverrides& overrides = {});

/// X = A(1) C B(1) + Y - A(1) A Y B B(1) with the default {1}-inverses.
/// Throws ConsistencyError (with residual) when no solution exists.
AffineSolutionFamily penrose_general_solution(const ProblemInstance& inst);

/// X = x0 + Y - A(1) A Y B B(1). Covers every solution X at Y = X - x0.
/// Throws NotASolutionError when A x0 B != C.
AffineSolutionFamily general_solution_from(const ProblemInstance& inst, const Matrix& x0);
AffineSolutionFamily general_solution_from(const ProblemInstance& inst, const Matrix& x0,
                                           const Matrix& a_inverse, const Matrix& b_inverse);

/// g(g(Y)) == g(Y) for all Y. Since g(g(Y)) = g(Y) + (x0 - A(1) C B(1)) this
/// reduces to x0 == A(1) C B(1), and for a solution x0,
/// A(1) C B(1) = (A(1) A) x0 (B B(1)) uses only the family's projectors.
/// Throws NotASolutionError when the family's x0 does not solve inst.
bool is_reproductive(const AffineSolutionFamily& fam, const ProblemInstance& inst);

/// Shapes of the x2 and y1 blocks accepted by reproductive_x0:
/// x2 is (n - a) x a, y1 is b x (p - b).
struct ReproductiveParamShape {
  std::size_t x2_rows, x2_cols, y1_rows, y1_cols;
};
ReproductiveParamShape reproductive_param_shape(const ProblemInstance& inst);

/// X0 = P1 [[C1, C1 y1], [x2 C1, x2 C1 y1]] Q2 where C1 is the leading
/// a x b block of Q1 C P2 (equivalently of Q1^ C^ P2^). This is
/// A(1) C B(1) for every {1}-inverse pair whose X2 block is x2 and whose Y1
/// block is y1, so the family around it is reproductive for those inverses.
/// Throws ConsistencyError for an inconsistent instance.
Matrix reproductive_x0(const ProblemInstance& inst, const Matrix& x2, const Matrix& y1);

/// n p - a b: independent parameters in the solution set.
/// Throws ConsistencyError for an inconsistent instance.
std::size_t solution_space_dimension(const ProblemInstance& inst);

}  // namespace axbc
