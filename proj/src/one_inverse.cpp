#include "axbc/one_inverse.hpp"

#include "axbc/elimination.hpp"

namespace axbc {
namespace {

void require_shape(const Matrix& block, std::size_t rows, std::size_t cols, const char* name) {
  if (block.rows() != rows || block.cols() != cols) {
    throw DimensionError(std::string("parameter block ") + name + " is " + block.shape_string() +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

OneInverseFamily::OneInverseFamily(RankNormalization normalization, std::size_t a_rows,
                                   std::size_t a_cols)
    : norm_(std::move(normalization)), n_(a_cols), m_(a_rows) {
  if (norm_.q.rows() != m_ || norm_.p.rows() != n_) {
    throw DimensionError("normalization " + norm_.q.shape_string() + ", " +
                         norm_.p.shape_string() + " does not fit a " + std::to_string(m_) + "x" +
                         std::to_string(n_) + " matrix");
  }
}

OneInverseParams OneInverseFamily::zero_params() const {
  const std::size_t a = rank();
  return {Matrix::zero(a, m_ - a), Matrix::zero(n_ - a, a), Matrix::zero(n_ - a, m_ - a)};
}

Matrix OneInverseFamily::materialize(const OneInverseParams& params) const {
  const std::size_t a = rank();
  require_shape(params.x1, a, m_ - a, "x1");
  require_shape(params.x2, n_ - a, a, "x2");
  require_shape(params.x3, n_ - a, m_ - a, "x3");
  return p() * Matrix::from_blocks(Matrix::identity(a), params.x1, params.x2, params.x3) * q();
}

Matrix OneInverseFamily::default_inverse() const { return materialize(zero_params()); }

std::optional<OneInverseParams> OneInverseFamily::recover_params(const Matrix& g) const {
  if (g.rows() != n_ || g.cols() != m_) {
    throw DimensionError("candidate inverse is " + g.shape_string() + ", expected " +
                         std::to_string(n_) + "x" + std::to_string(m_));
  }
  const Matrix core = *inverse(p()) * g * *inverse(q());
  const std::size_t a = rank();
  if (core.block(0, 0, a, a) != Matrix::identity(a)) return std::nullopt;
  return OneInverseParams{core.block(0, a, a, m_ - a), core.block(a, 0, n_ - a, a),
                          core.block(a, a, n_ - a, m_ - a)};
}

OneInverseFamily one_inverse_family(const Matrix& a, TransformStyle style) {
  return {normalize(a, style), a.rows(), a.cols()};
}

bool is_one_inverse(const Matrix& a, const Matrix& g) {
  if (g.rows() != a.cols() || g.cols() != a.rows()) {
    throw DimensionError("{1}-inverse candidate " + g.shape_string() + " for " +
                         a.shape_string() + " matrix");
  }
  return a * g * a == a;
}

std::optional<CommutativeInverseSet> commutative_one_inverse_set(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("commutative {1}-inverse of non-square " + a.shape_string());
  const std::size_t n = a.rows();
  const std::size_t unknowns = n * n;
  // Unknown X(k, l) sits at column k * n + l.
  std::vector<Rational> coef;
  std::vector<Rational> rhs;
  coef.reserve(2 * unknowns * unknowns);
  // (A X A)(i, j) = sum_{k,l} A(i,k) A(l,j) X(k,l) = A(i,j)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) coef.push_back(a(i, k) * a(l, j));
      }
      rhs.push_back(a(i, j));
    }
  }
  // (A X - X A)(i, j) = sum_k A(i,k) X(k,j) - sum_l X(i,l) A(l,j) = 0
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(unknowns);
      for (std::size_t k = 0; k < n; ++k) row[k * n + j] += a(i, k);
      for (std::size_t l = 0; l < n; ++l) row[i * n + l] -= a(l, j);
      coef.insert(coef.end(), row.begin(), row.end());
      rhs.emplace_back();
    }
  }
  auto solution = solve_linear(Matrix(2 * unknowns, unknowns, std::move(coef)),
                               Matrix::column(std::move(rhs)));
  if (!solution) return std::nullopt;

  auto reshape = [n](const Matrix& v) {
    return Matrix(n, n, std::vector<Rational>(v.entries().begin(), v.entries().end()));
  };
  CommutativeInverseSet out{reshape(solution->particular), {}};
  for (const Matrix& k : solution->kernel) out.kernel.push_back(reshape(k));
  return out;
}

std::optional<Matrix> commutative_one_inverse(const Matrix& a) {
  auto set = commutative_one_inverse_set(a);
  if (!set) return std::nullopt;
  return std::move(set->particular);
}

}  // namespace axbc
