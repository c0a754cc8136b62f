#include "axbc/solver.hpp"

#include <string>

#include "axbc/elimination.hpp"

namespace axbc {
namespace {

HatDecomposition hat_for(const Matrix& m, const std::optional<PermutationOverride>& perms) {
  return perms ? hat_decompose(m, *perms) : hat_decompose(m);
}

void require_solution(const ProblemInstance& inst, const Matrix& x0) {
  if (x0.rows() != inst.unknown_rows() || x0.cols() != inst.unknown_cols()) {
    throw DimensionError("particular solution is " + x0.shape_string() + ", expected " +
                         std::to_string(inst.unknown_rows()) + "x" +
                         std::to_string(inst.unknown_cols()));
  }
  Matrix residual = inst.a * x0 * inst.b - inst.c;
  if (!residual.is_zero()) {
    throw NotASolutionError("supplied X0 does not satisfy A X0 B = C", std::move(residual));
  }
}

void require_consistent(const ProblemInstance& inst, const EquationFactors& f) {
  Matrix residual = penrose_residual(inst, f.default_a_inverse, f.default_b_inverse);
  if (!residual.is_zero()) {
    throw ConsistencyError("A X B = C is inconsistent: A A(1) C B(1) B != C", std::move(residual));
  }
}

}  // namespace

EquationFactors factorize(const Matrix& a, const Matrix& b, const HatOverrides& overrides) {
  HatDecomposition hat_a = hat_for(a, overrides.a);
  HatDecomposition hat_b = hat_for(b, overrides.b);
  RankNormalization norm_a = normalize(hat_a, TransformStyle::kRow);
  RankNormalization norm_b = normalize(hat_b, TransformStyle::kColumn);
  OneInverseFamily family_a(norm_a, a.rows(), a.cols());
  OneInverseFamily family_b(norm_b, b.rows(), b.cols());
  Matrix ga = family_a.default_inverse();
  Matrix gb = family_b.default_inverse();
  return {std::move(hat_a), std::move(hat_b), std::move(norm_a), std::move(norm_b),
          std::move(family_a), std::move(family_b), std::move(ga), std::move(gb)};
}

Matrix penrose_residual(const ProblemInstance& inst, const Matrix& a_inverse,
                        const Matrix& b_inverse) {
  inst.validate();
  return inst.a * a_inverse * inst.c * b_inverse * inst.b - inst.c;
}

bool penrose_consistent(const ProblemInstance& inst) {
  inst.validate();
  // A = 0 or B = 0 turns the equation into 0 = C.
  if (inst.a.is_zero() || inst.b.is_zero()) return inst.c.is_zero();
  const EquationFactors f = factorize(inst.a, inst.b);
  return penrose_consistent(inst, f.default_a_inverse, f.default_b_inverse);
}

bool penrose_consistent(const ProblemInstance& inst, const Matrix& a_inverse,
                        const Matrix& b_inverse) {
  return penrose_residual(inst, a_inverse, b_inverse).is_zero();
}

std::vector<StructuredViolation> structured_violations(const ProblemInstance& inst,
                                                       const HatOverrides& overrides) {
  inst.validate();
  const HatDecomposition hat_a = hat_for(inst.a, overrides.a);
  const HatDecomposition hat_b = hat_for(inst.b, overrides.b);
  const std::size_t a = hat_a.rank;
  const std::size_t b = hat_b.rank;
  const std::size_t m = inst.c.rows();
  const std::size_t q = inst.c.cols();

  const Matrix c_hat = hat_a.t_rows * inst.c * hat_b.t_cols;
  const Matrix& alpha = hat_a.row_coeffs;  // (m - a) x a
  const Matrix& beta = hat_b.col_coeffs;   // b x (q - b)
  const Matrix c11 = c_hat.block(0, 0, a, b);
  const Matrix expected = Matrix::from_blocks(c11, c11 * beta, alpha * c11, alpha * c11 * beta);

  std::vector<StructuredViolation> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (i < a && j < b) continue;
      if (expected(i, j) == c_hat(i, j)) continue;
      using R = StructuredViolation::Relation;
      const R relation = i >= a && j >= b ? R::kDoublyDependent
                         : i >= a         ? R::kDependentRow
                                          : R::kDependentColumn;
      out.push_back({relation, i, j, hat_a.row_order[i], hat_b.col_order[j], expected(i, j),
                     c_hat(i, j)});
    }
  }
  return out;
}

bool structured_consistent(const ProblemInstance& inst, const HatOverrides& overrides) {
  return structured_violations(inst, overrides).empty();
}

Matrix build_consistent_c(const Matrix& a, const Matrix& b, const Matrix& c1,
                          const HatOverrides& overrides) {
  const HatDecomposition hat_a = hat_for(a, overrides.a);
  const HatDecomposition hat_b = hat_for(b, overrides.b);
  if (c1.rows() != hat_a.rank || c1.cols() != hat_b.rank) {
    throw DimensionError("free block C1 is " + c1.shape_string() + ", expected rank(A) x rank(B) = " +
                         std::to_string(hat_a.rank) + "x" + std::to_string(hat_b.rank));
  }
  const Matrix& alpha = hat_a.row_coeffs;
  const Matrix& beta = hat_b.col_coeffs;
  const Matrix c_hat = Matrix::from_blocks(c1, c1 * beta, alpha * c1, alpha * c1 * beta);
  // Permutation matrices are orthogonal.
  return hat_a.t_rows.transpose() * c_hat * hat_b.t_cols.transpose();
}

AffineSolutionFamily penrose_general_solution(const ProblemInstance& inst) {
  inst.validate();
  const EquationFactors f = factorize(inst.a, inst.b);
  require_consistent(inst, f);
  const Matrix& ga = f.default_a_inverse;
  const Matrix& gb = f.default_b_inverse;
  return {ga * inst.c * gb, ga * inst.a, inst.b * gb, AffineSolutionFamily::Form::kSandwich};
}

AffineSolutionFamily general_solution_from(const ProblemInstance& inst, const Matrix& x0) {
  inst.validate();
  const EquationFactors f = factorize(inst.a, inst.b);
  return general_solution_from(inst, x0, f.default_a_inverse, f.default_b_inverse);
}

AffineSolutionFamily general_solution_from(const ProblemInstance& inst, const Matrix& x0,
                                           const Matrix& a_inverse, const Matrix& b_inverse) {
  inst.validate();
  require_solution(inst, x0);
  if (!is_one_inverse(inst.a, a_inverse) || !is_one_inverse(inst.b, b_inverse)) {
    throw std::invalid_argument("supplied matrices are not {1}-inverses of A and B");
  }
  return {x0, a_inverse * inst.a, inst.b * b_inverse, AffineSolutionFamily::Form::kSandwich};
}

bool is_reproductive(const AffineSolutionFamily& fam, const ProblemInstance& inst) {
  inst.validate();
  require_solution(inst, fam.x0());
  const Matrix penrose_x0 = fam.left_proj() * fam.x0() * fam.right_proj();
  return fam.x0() == penrose_x0;
}

ReproductiveParamShape reproductive_param_shape(const ProblemInstance& inst) {
  const std::size_t a = rank(inst.a);
  const std::size_t b = rank(inst.b);
  return {inst.a.cols() - a, a, b, inst.b.rows() - b};
}

Matrix reproductive_x0(const ProblemInstance& inst, const Matrix& x2, const Matrix& y1) {
  inst.validate();
  const EquationFactors f = factorize(inst.a, inst.b);
  require_consistent(inst, f);
  const std::size_t a = f.norm_a.rank;
  const std::size_t b = f.norm_b.rank;
  const std::size_t n = inst.a.cols();
  const std::size_t p = inst.b.rows();
  if (x2.rows() != n - a || x2.cols() != a) {
    throw DimensionError("x2 is " + x2.shape_string() + ", expected " + std::to_string(n - a) +
                         "x" + std::to_string(a));
  }
  if (y1.rows() != b || y1.cols() != p - b) {
    throw DimensionError("y1 is " + y1.shape_string() + ", expected " + std::to_string(b) + "x" +
                         std::to_string(p - b));
  }
  // Consistency makes Q1 C P2 = [[C1, 0], [0, 0]].
  const Matrix c1 = (f.norm_a.q * inst.c * f.norm_b.p).block(0, 0, a, b);
  const Matrix x2c1 = x2 * c1;
  const Matrix core = Matrix::from_blocks(c1, c1 * y1, x2c1, x2c1 * y1);
  return f.norm_a.p * core * f.norm_b.q;
}

std::size_t solution_space_dimension(const ProblemInstance& inst) {
  inst.validate();
  const EquationFactors f = factorize(inst.a, inst.b);
  require_consistent(inst, f);
  return inst.a.cols() * inst.b.rows() - f.norm_a.rank * f.norm_b.rank;
}

}  // namespace axbc
