#include "axbc/oracle.hpp"

#include "axbc/elimination.hpp"

namespace axbc::oracle {

Matrix flatten(const Matrix& m) {
  return Matrix::column(std::vector<Rational>(m.entries().begin(), m.entries().end()));
}

Matrix reshape(const Matrix& column, std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<Rational>(column.entries().begin(), column.entries().end())};
}

VectorizedSystem vectorize_terms(std::span<const LinearTerm> terms, const Matrix& rhs,
                                 std::size_t unknown_rows, std::size_t unknown_cols) {
  const std::size_t out_rows = rhs.rows();
  const std::size_t out_cols = rhs.cols();
  for (const LinearTerm& t : terms) {
    if (t.left.rows() != out_rows || t.left.cols() != unknown_rows ||
        t.right.rows() != unknown_cols || t.right.cols() != out_cols) {
      throw DimensionError("term " + t.left.shape_string() + " * X(" +
                           std::to_string(unknown_rows) + "x" + std::to_string(unknown_cols) +
                           ") * " + t.right.shape_string() + " does not produce " +
                           rhs.shape_string());
    }
  }
  const std::size_t unknowns = unknown_rows * unknown_cols;
  std::vector<Rational> coef(out_rows * out_cols * unknowns);
  for (std::size_t i = 0; i < out_rows; ++i) {
    for (std::size_t j = 0; j < out_cols; ++j) {
      Rational* row = &coef[(i * out_cols + j) * unknowns];
      for (const LinearTerm& t : terms) {
        for (std::size_t k = 0; k < unknown_rows; ++k) {
          if (t.left(i, k).is_zero()) continue;
          for (std::size_t l = 0; l < unknown_cols; ++l) {
            row[k * unknown_cols + l] += t.scale * t.left(i, k) * t.right(l, j);
          }
        }
      }
    }
  }
  return {Matrix(out_rows * out_cols, unknowns, std::move(coef)), flatten(rhs), unknown_rows,
          unknown_cols};
}

VectorizedSystem vectorize_axbc(const ProblemInstance& inst) {
  inst.validate();
  const LinearTerm term{1, inst.a, inst.b};
  return vectorize_terms({&term, 1}, inst.c, inst.unknown_rows(), inst.unknown_cols());
}

VectorizedSystem stack(std::span<const VectorizedSystem> systems) {
  if (systems.empty()) throw DimensionError("cannot stack an empty sequence of systems");
  VectorizedSystem out = systems.front();
  for (const VectorizedSystem& s : systems.subspan(1)) {
    if (s.unknown_rows != out.unknown_rows || s.unknown_cols != out.unknown_cols) {
      throw DimensionError("stacked systems disagree on the unknown's shape");
    }
    out.coefficient = Matrix::vstack(out.coefficient, s.coefficient);
    out.rhs = Matrix::vstack(out.rhs, s.rhs);
  }
  return out;
}

VectorizedSystem vectorize_common_system(const CommonSolutionSystem& sys) {
  sys.validate();
  const std::size_t n = sys.a.cols();
  const std::size_t k = sys.d.rows();
  const LinearTerm left{1, sys.a, Matrix::identity(k)};
  const LinearTerm right{1, Matrix::identity(n), sys.d};
  const VectorizedSystem parts[] = {vectorize_terms({&left, 1}, sys.b, n, k),
                                    vectorize_terms({&right, 1}, sys.e, n, k)};
  return stack(parts);
}

VectorizedSystem vectorize_commuting_system(const CommutingSystem& sys) {
  sys.validate();
  const std::size_t n = sys.a.rows();
  const Matrix id = Matrix::identity(n);
  const LinearTerm inner{1, sys.a, sys.a};
  const LinearTerm commute[] = {{1, sys.a, id}, {-1, id, sys.a}};
  const VectorizedSystem parts[] = {vectorize_terms({&inner, 1}, sys.a, n, n),
                                    vectorize_terms(commute, Matrix::zero(n, n), n, n)};
  return stack(parts);
}

std::optional<OracleSolution> oracle_solve(const VectorizedSystem& sys) {
  const std::size_t unknowns = sys.coefficient.cols();
  const EliminationResult aug = eliminate(Matrix::hstack(sys.coefficient, sys.rhs));
  // A pivot in the rhs column means rank([coef | rhs]) > rank(coef).
  if (!aug.pivot_columns.empty() && aug.pivot_columns.back() == unknowns) return std::nullopt;

  std::vector<Rational> x(unknowns);
  for (std::size_t r = 0; r < aug.rank; ++r) x[aug.pivot_columns[r]] = aug.rref(r, unknowns);

  OracleSolution out{reshape(Matrix::column(std::move(x)), sys.unknown_rows, sys.unknown_cols), {}};
  for (const Matrix& v : kernel_basis(sys.coefficient)) {
    out.kernel.push_back(reshape(v, sys.unknown_rows, sys.unknown_cols));
  }
  return out;
}

}  // namespace axbc::oracle
