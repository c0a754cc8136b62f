#include "axbc/systems.hpp"

#include "axbc/one_inverse.hpp"

namespace axbc {
namespace {

using Form = AffineSolutionFamily::Form;

struct CommonFactors {
  Matrix a_inverse;
  Matrix d_inverse;
};

CommonFactors common_factors(const CommonSolutionSystem& sys) {
  return {one_inverse_family(sys.a).default_inverse(), one_inverse_family(sys.d).default_inverse()};
}

std::vector<std::string> failures_with(const CommonSolutionSystem& sys, const CommonFactors& f) {
  std::vector<std::string> failed;
  if (sys.a * f.a_inverse * sys.b != sys.b) failed.emplace_back(kLeftSolvable);
  if (sys.e * f.d_inverse * sys.d != sys.e) failed.emplace_back(kRightSolvable);
  if (sys.a * sys.e != sys.b * sys.d) failed.emplace_back(kCompatible);
  return failed;
}

// Both residual blocks laid end to end as one row, row-major each.
Matrix joined_residual(const Matrix& first, const Matrix& second) {
  std::vector<Rational> entries(first.entries().begin(), first.entries().end());
  entries.insert(entries.end(), second.entries().begin(), second.entries().end());
  const std::size_t n = entries.size();
  return {1, n, std::move(entries)};
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

Matrix abar_or_throw(const CommutingSystem& sys) {
  auto abar = commutative_one_inverse(sys.a);
  if (!abar) {
    throw SystemInconsistent("A has no commutative {1}-inverse; AXA = A and AX = XA have no "
                             "common solution",
                             {"commutative {1}-inverse exists"});
  }
  return std::move(*abar);
}

}  // namespace

void CommonSolutionSystem::validate() const {
  // A m x n, B m x k, D k x l, E n x l.
  if (b.rows() != a.rows() || e.rows() != a.cols() || d.rows() != b.cols() ||
      e.cols() != d.cols()) {
    throw DimensionError("common system shapes do not conform: A " + a.shape_string() + ", B " +
                         b.shape_string() + ", D " + d.shape_string() + ", E " + e.shape_string());
  }
}

std::vector<std::string> common_system_failures(const CommonSolutionSystem& sys) {
  sys.validate();
  return failures_with(sys, common_factors(sys));
}

bool common_system_consistent(const CommonSolutionSystem& sys) {
  return common_system_failures(sys).empty();
}

AffineSolutionFamily common_system_solve(const CommonSolutionSystem& sys) {
  sys.validate();
  const CommonFactors f = common_factors(sys);
  auto failed = failures_with(sys, f);
  if (!failed.empty()) {
    throw SystemInconsistent("A X = B and X D = E have no common solution: " + join(failed),
                             std::move(failed));
  }
  const Matrix left = f.a_inverse * sys.a;
  const Matrix ed = sys.e * f.d_inverse;
  Matrix x0 = f.a_inverse * sys.b + ed - left * ed;
  return {std::move(x0), left, sys.d * f.d_inverse, Form::kProjected};
}

AffineSolutionFamily common_system_family_from(const CommonSolutionSystem& sys, const Matrix& x0) {
  sys.validate();
  if (x0.rows() != sys.a.cols() || x0.cols() != sys.d.rows()) {
    throw DimensionError("common solution candidate is " + x0.shape_string());
  }
  Matrix residual = joined_residual(sys.a * x0 - sys.b, x0 * sys.d - sys.e);
  if (!residual.is_zero()) {
    throw NotASolutionError("supplied X0 does not solve A X = B and X D = E", std::move(residual));
  }
  const CommonFactors f = common_factors(sys);
  return {x0, f.a_inverse * sys.a, sys.d * f.d_inverse, Form::kProjected};
}

void CommutingSystem::validate() const {
  if (!a.is_square()) throw DimensionError("commuting system needs square A, got " + a.shape_string());
}

AffineSolutionFamily commuting_system_solve(const CommutingSystem& sys) {
  sys.validate();
  const Matrix abar = abar_or_throw(sys);
  const Matrix abar_a = abar * sys.a;
  const Matrix a_abar = sys.a * abar;
  return {abar_a * abar, abar_a, a_abar, Form::kProjected};
}

AffineSolutionFamily commuting_system_family_from(const CommutingSystem& sys, const Matrix& x0) {
  sys.validate();
  if (x0.rows() != sys.a.rows() || x0.cols() != sys.a.cols()) {
    throw DimensionError("commuting solution candidate is " + x0.shape_string());
  }
  Matrix residual = joined_residual(sys.a * x0 * sys.a - sys.a, sys.a * x0 - x0 * sys.a);
  if (!residual.is_zero()) {
    throw NotASolutionError("supplied X0 does not solve A X A = A and A X = X A",
                            std::move(residual));
  }
  const Matrix abar = abar_or_throw(sys);
  return {x0, abar * sys.a, sys.a * abar, Form::kProjected};
}

}  // namespace axbc
