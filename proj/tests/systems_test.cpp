#include <gtest/gtest.h>

#include "axbc/elimination.hpp"
#include "axbc/oracle.hpp"
#include "axbc/random_instances.hpp"
#include "axbc/systems.hpp"

using namespace axbc;

namespace {

// A X = B, X D = E built around a hidden common solution.
CommonSolutionSystem consistent_common(InstanceGenerator& gen) {
  const std::size_t m = gen.dimension(1, 4), n = gen.dimension(1, 4);
  const std::size_t k = gen.dimension(1, 4), l = gen.dimension(1, 4);
  const Matrix a = gen.deficient_matrix(m, n);
  const Matrix d = gen.deficient_matrix(k, l);
  const Matrix x = gen.matrix(n, k);
  return {a, a * x, d, x * d};
}

bool solves_common(const CommonSolutionSystem& sys, const Matrix& x) {
  return sys.a * x == sys.b && x * sys.d == sys.e;
}

}  // namespace

TEST(CommonSystem, FamilyMembersSolveBothEquations) {
  InstanceGenerator gen(51);
  for (int k = 0; k < 30; ++k) {
    const CommonSolutionSystem sys = consistent_common(gen);
    ASSERT_TRUE(common_system_consistent(sys));
    const AffineSolutionFamily fam = common_system_solve(sys);
    EXPECT_TRUE(fam.is_reproductive());
    for (int s = 0; s < 10; ++s) {
      const Matrix y = gen.matrix(fam.x0().rows(), fam.x0().cols());
      const Matrix x = fam.materialize(y);
      EXPECT_TRUE(solves_common(sys, x));
      EXPECT_EQ(fam.materialize(x), x);
    }
  }
}

TEST(CommonSystem, ParameterCountMatchesOracle) {
  InstanceGenerator gen(52);
  for (int k = 0; k < 30; ++k) {
    const CommonSolutionSystem sys = consistent_common(gen);
    const auto sol = oracle::oracle_solve(oracle::vectorize_common_system(sys));
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(common_system_solve(sys).free_parameter_count(), sol->kernel.size());
  }
}

TEST(CommonSystem, ReportsEachFailedCriterion) {
  const Matrix a{{1, 0}, {0, 0}};
  const Matrix d{{1, 0}, {0, 0}};
  const CommonSolutionSystem left_bad{a, Matrix{{0, 0}, {0, 1}}, d, Matrix(2, 2)};
  const auto failures = common_system_failures(left_bad);
  ASSERT_FALSE(failures.empty());
  EXPECT_EQ(failures.front(), kLeftSolvable);

  const CommonSolutionSystem right_bad{a, Matrix(2, 2), d, Matrix{{0, 1}, {0, 0}}};
  const auto rf = common_system_failures(right_bad);
  EXPECT_NE(std::find(rf.begin(), rf.end(), kRightSolvable), rf.end());

  // Each equation alone is solvable but they disagree.
  const CommonSolutionSystem incompatible{Matrix{{1}}, Matrix{{1}}, Matrix{{1}}, Matrix{{2}}};
  EXPECT_EQ(common_system_failures(incompatible), std::vector<std::string>{kCompatible});
  try {
    (void)common_system_solve(incompatible);
    FAIL() << "expected SystemInconsistent";
  } catch (const SystemInconsistent& e) {
    EXPECT_EQ(e.failed_criteria(), std::vector<std::string>{kCompatible});
  }
  EXPECT_FALSE(oracle::oracle_solve(oracle::vectorize_common_system(incompatible)).has_value());
}

TEST(CommonSystem, FamilyAroundOracleSolution) {
  InstanceGenerator gen(53);
  for (int k = 0; k < 20; ++k) {
    const CommonSolutionSystem sys = consistent_common(gen);
    const auto sol = oracle::oracle_solve(oracle::vectorize_common_system(sys));
    ASSERT_TRUE(sol.has_value());
    const AffineSolutionFamily f = common_system_solve(sys);
    const AffineSolutionFamily g = common_system_family_from(sys, sol->particular);
    for (int s = 0; s < 5; ++s) {
      const Matrix y = gen.matrix(f.x0().rows(), f.x0().cols());
      EXPECT_EQ(g.materialize(y - sol->particular), f.materialize(y));
    }
  }
  const CommonSolutionSystem sys{Matrix{{1}}, Matrix{{1}}, Matrix{{1}}, Matrix{{1}}};
  EXPECT_THROW((void)common_system_family_from(sys, Matrix{{2}}), NotASolutionError);
}

TEST(CommonSystem, ShapeValidation) {
  const CommonSolutionSystem sys{Matrix(2, 3), Matrix(3, 2), Matrix(2, 2), Matrix(3, 2)};
  EXPECT_THROW(sys.validate(), DimensionError);
}

TEST(CommutingSystem, IdempotentDiagonal) {
  const AffineSolutionFamily fam = commuting_system_solve({Matrix{{1, 0}, {0, 0}}});
  EXPECT_EQ(fam.x0(), (Matrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(fam.free_parameter_count(), 1u);
  EXPECT_TRUE(fam.is_reproductive());
}

TEST(CommutingSystem, NilpotentIsInconsistent) {
  try {
    (void)commuting_system_solve({Matrix{{0, 1}, {0, 0}}});
    FAIL() << "expected SystemInconsistent";
  } catch (const SystemInconsistent& e) {
    EXPECT_EQ(e.failed_criteria().size(), 1u);
  }
}

TEST(CommutingSystem, MembersSatisfyBothEquationsAndMatchOracle) {
  InstanceGenerator gen(54);
  int solved = 0;
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = gen.dimension(1, 4);
    const CommutingSystem sys{gen.deficient_matrix(n, n)};
    const auto sol = oracle::oracle_solve(oracle::vectorize_commuting_system(sys));
    if (!sol) {
      EXPECT_THROW((void)commuting_system_solve(sys), SystemInconsistent);
      continue;
    }
    ++solved;
    const AffineSolutionFamily fam = commuting_system_solve(sys);
    EXPECT_EQ(fam.free_parameter_count(), sol->kernel.size());
    for (int s = 0; s < 5; ++s) {
      const Matrix x = fam.materialize(gen.matrix(n, n));
      EXPECT_EQ(sys.a * x * sys.a, sys.a);
      EXPECT_EQ(sys.a * x, x * sys.a);
    }
    const AffineSolutionFamily g = commuting_system_family_from(sys, sol->particular);
    const Matrix y = gen.matrix(n, n);
    EXPECT_EQ(g.materialize(y - sol->particular), fam.materialize(y));
  }
  EXPECT_GT(solved, 0);
}
