#pragma once

#include <string>
#include <vector>

#include "axbc/matrix.hpp"
#include "axbc/problem.hpp"
#include "axbc/solution_family.hpp"

namespace axbc {

/// A X = B and X D = E. X is cols(A) x rows(D).
struct CommonSolutionSystem {
  Matrix a;
  Matrix b;
  Matrix d;
  Matrix e;

  void validate() const;
};

/// Names used in diagnostics and SystemInconsistent::failed_criteria().
inline constexpr const char* kLeftSolvable = "A A(1) B = B";
inline constexpr const char* kRightSolvable = "E D(1) D = E";
inline constexpr const char* kCompatible = "A E = B D";

/// Criteria that fail, out of: A A(1) B = B, E D(1) D = E, A E = B D.
std::vector<std::string> common_system_failures(const CommonSolutionSystem& sys);
bool common_system_consistent(const CommonSolutionSystem& sys);

/// f(Y) = A(1) B + E D(1) - A(1) A E D(1) + (I - A(1) A) Y (I - D D(1)),
/// reproductive. Throws SystemInconsistent naming the failed criteria.
AffineSolutionFamily common_system_solve(const CommonSolutionSystem& sys);

/// g(Y) = x0 + (I - A(1) A) Y (I - D D(1)) around a supplied common solution.
/// Throws NotASolutionError when x0 fails either equation.
AffineSolutionFamily common_system_family_from(const CommonSolutionSystem& sys, const Matrix& x0);

/// A X A = A and A X = X A for square A.
struct CommutingSystem {
  Matrix a;

  void validate() const;
};

/// f(Y) = Abar A Abar + Y - Abar A Y - Y A Abar + Abar A Y A Abar for a
/// commutative {1}-inverse Abar; equivalently Abar A Abar + (I - Abar A) Y (I - A Abar).
/// Reproductive. Throws SystemInconsistent when no commutative {1}-inverse exists.
AffineSolutionFamily commuting_system_solve(const CommutingSystem& sys);

/// g(Y) = x0 + Y - Abar A Y - Y A Abar + Abar A Y A Abar = f(x0 + Y).
/// Throws NotASolutionError when x0 fails either equation.
AffineSolutionFamily commuting_system_family_from(const CommutingSystem& sys, const Matrix& x0);

}  // namespace axbc
