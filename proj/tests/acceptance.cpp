// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All checks are exact; the only tolerances are the runtime limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "axbc/elimination.hpp"
#include "axbc/oracle.hpp"
#include "axbc/random_instances.hpp"
#include "axbc/solver.hpp"
#include "axbc/systems.hpp"
#include "fixtures.hpp"

using namespace axbc;

namespace {

constexpr double kExampleLimitSeconds = 1.0;
constexpr double kPropertyLimitSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kPropertyInstances = 200;
constexpr std::size_t kMaxDim = 6;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o, double seconds, double limit) {
  const bool ok = o.pass && seconds < limit;
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d  %-34s %8.3fs (limit %.0fs)  %s\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), seconds, limit, o.detail.c_str());
  std::fflush(stdout);
}

template <class Fn>
std::pair<Outcome, double> timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = fn();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return {std::move(o), dt.count()};
}

std::string count(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

Matrix random_like(InstanceGenerator& gen, const Matrix& m) { return gen.matrix(m.rows(), m.cols()); }

Matrix oracle_member(InstanceGenerator& gen, const oracle::OracleSolution& sol) {
  Matrix x = sol.particular;
  for (const Matrix& dir : sol.kernel) x = x + gen.entry() * dir;
  return x;
}

// ---- criteria 1-3: worked example -------------------------------------------

Outcome example_scalars() {
  const HatDecomposition ha = hat_decompose(fixtures::example_a(), fixtures::example_override_a());
  const HatDecomposition hb = hat_decompose(fixtures::example_b(), fixtures::example_override_b());
  const Matrix alpha{{1, -1}, {1, 1}, {0, 0}};
  const Matrix beta{{0, 1, 1}, {0, 1, -1}};
  const bool ranks = rank(fixtures::example_a()) == 2 && rank(fixtures::example_b()) == 2 &&
                     ha.rank == 2 && hb.rank == 2;
  const bool ok = ranks && ha.row_coeffs == alpha && hb.col_coeffs == beta;
  return {ok, "ranks 2,2; alpha and beta exact under supplied permutations"};
}

Outcome example_verdicts() {
  const HatOverrides overrides{fixtures::example_override_a(), fixtures::example_override_b()};
  bool ok = true;
  for (bool consistent : {true, false}) {
    const ProblemInstance inst = fixtures::example_instance(consistent);
    const bool penrose = penrose_consistent(inst);
    const bool structured = structured_consistent(inst);
    const bool structured_fixed = structured_consistent(inst, overrides);
    const bool oracle = oracle::oracle_solve(oracle::vectorize_axbc(inst)).has_value();
    ok = ok && penrose == consistent && structured == consistent &&
         structured_fixed == consistent && oracle == consistent;
  }
  return {ok, "(a) consistent, (b) inconsistent under all three methods"};
}

Outcome example_general_c() {
  const Matrix c =
      build_consistent_c(fixtures::example_a(), fixtures::example_b(), fixtures::example_c1());
  return {c == fixtures::example_c_consistent(), "C from c1 = [[1,0],[-2,2]] matches entrywise"};
}

// ---- criteria 4, 5, 7: random property suite --------------------------------

struct PropertyStats {
  std::size_t instances = 0;
  std::size_t consistent = 0;
  std::size_t agree = 0;
  std::size_t sound = 0;
  std::size_t complete = 0;
  std::size_t dimension = 0;
};

PropertyStats run_property_suite() {
  InstanceGenerator gen(kSeed);
  PropertyStats s;
  for (std::size_t k = 0; k < kPropertyInstances; ++k) {
    const ProblemInstance inst = gen.instance(kMaxDim, k % 2 == 0, gen.coin());
    ++s.instances;
    const bool penrose = penrose_consistent(inst);
    const bool structured = structured_consistent(inst);
    const auto oracle_sol = oracle::oracle_solve(oracle::vectorize_axbc(inst));
    if (penrose == structured && structured == oracle_sol.has_value()) ++s.agree;
    if (!penrose || !oracle_sol) continue;
    ++s.consistent;

    const AffineSolutionFamily fam = penrose_general_solution(inst);
    bool sound = true;
    for (int t = 0; t < 50 && sound; ++t) {
      sound = inst.a * fam.materialize(random_like(gen, fam.x0())) * inst.b == inst.c;
    }
    if (sound) ++s.sound;
    bool complete = true;
    for (int t = 0; t < 10 && complete; ++t) {
      const Matrix x = oracle_member(gen, *oracle_sol);
      complete = fam.materialize(x - fam.x0()) == x;
    }
    if (complete) ++s.complete;

    const std::size_t np = inst.unknown_rows() * inst.unknown_cols();
    const std::size_t ab = rank(inst.a) * rank(inst.b);
    const std::size_t dim = solution_space_dimension(inst);
    if (dim == np - ab && dim == oracle_sol->kernel.size() && fam.free_parameter_count() == dim) {
      ++s.dimension;
    }
  }
  return s;
}

// ---- criterion 6: reproductivity ---------------------------------------------

bool functionally_reproductive(InstanceGenerator& gen, const AffineSolutionFamily& fam) {
  for (int t = 0; t < 50; ++t) {
    const Matrix once = fam.materialize(random_like(gen, fam.x0()));
    if (fam.materialize(once) != once) return false;
  }
  return true;
}

Outcome reproductivity() {
  InstanceGenerator gen(kSeed + 6);
  std::size_t penrose_ok = 0, shifted_fail = 0, tests_agree = 0, total = 0;
  std::size_t shifted_agree = 0, total_shifted = 0;
  for (int k = 0; k < 40; ++k) {
    const ProblemInstance inst = gen.instance(5, true, true);
    const AffineSolutionFamily fam = penrose_general_solution(inst);
    const bool closed = is_reproductive(fam, inst);
    const bool functional = functionally_reproductive(gen, fam);
    ++total;
    if (closed && functional) ++penrose_ok;
    if (closed == functional) ++tests_agree;

    const auto sol = oracle::oracle_solve(oracle::vectorize_axbc(inst));
    for (const Matrix& dir : sol->kernel) {
      const AffineSolutionFamily shifted = general_solution_from(inst, fam.x0() + dir);
      const bool s_closed = is_reproductive(shifted, inst);
      if (!s_closed) {
        ++shifted_fail;
        ++total_shifted;
        if (!functionally_reproductive(gen, shifted)) ++shifted_agree;
        break;
      }
    }
  }

  // A solution whose rank differs from rank(C) is never A(1) C B(1).
  const ProblemInstance witness{Matrix{{1, 0}}, Matrix{{1}, {0}}, Matrix{{1}}};
  const Matrix x = Matrix::identity(2);
  const bool certificate = witness.a * x * witness.b == witness.c && rank(x) != rank(witness.c) &&
                           !is_reproductive(general_solution_from(witness, x), witness);

  const bool ok = penrose_ok == total && tests_agree == total && shifted_agree == total_shifted &&
                  shifted_fail > 0 && certificate;
  return {ok, "penrose families " + count(penrose_ok, total) + ", tests agree " +
                  count(tests_agree + shifted_agree, total + total_shifted) +
                  ", shifted x0 non-reproductive on " +
                  std::to_string(shifted_fail) + ", rank certificate " +
                  (certificate ? "holds" : "fails")};
}

// ---- criterion 8: reproductive X0 constructor --------------------------------

struct ParamProbe {
  Matrix x2;
  Matrix y1;
};

Matrix x0_at(const ProblemInstance& inst, const ParamProbe& p) { return reproductive_x0(inst, p.x2, p.y1); }

// Second difference of X0 along a random joint direction.
bool second_difference_vanishes(InstanceGenerator& gen, const ProblemInstance& inst) {
  const auto shape = reproductive_param_shape(inst);
  for (int t = 0; t < 10; ++t) {
    const Matrix x2 = gen.matrix(shape.x2_rows, shape.x2_cols);
    const Matrix y1 = gen.matrix(shape.y1_rows, shape.y1_cols);
    const Matrix dx = gen.matrix(shape.x2_rows, shape.x2_cols);
    const Matrix dy = gen.matrix(shape.y1_rows, shape.y1_cols);
    const Matrix f0 = x0_at(inst, {x2, y1});
    const Matrix f1 = x0_at(inst, {x2 + dx, y1 + dy});
    const Matrix f2 = x0_at(inst, {x2 + Rational(2) * dx, y1 + Rational(2) * dy});
    if (!(f2 - Rational(2) * f1 + f0).is_zero()) return false;
  }
  return true;
}

bool blocks_empty(const ProblemInstance& inst) {
  const auto s = reproductive_param_shape(inst);
  return s.x2_rows * s.x2_cols == 0 && s.y1_rows * s.y1_cols == 0;
}

ProblemInstance consistent_with(InstanceGenerator& gen, Matrix a, Matrix b) {
  Matrix c = a * gen.matrix(a.cols(), b.rows()) * b;
  return {std::move(a), std::move(b), std::move(c)};
}

Outcome reproductive_constructor() {
  InstanceGenerator gen(kSeed + 8);
  std::size_t solved = 0, probes = 0;
  for (int k = 0; k < 20; ++k) {
    const ProblemInstance inst = gen.instance(kMaxDim, k % 2 == 0, true);
    const auto shape = reproductive_param_shape(inst);
    for (int t = 0; t < 50; ++t) {
      const Matrix x0 = reproductive_x0(inst, gen.matrix(shape.x2_rows, shape.x2_cols),
                                        gen.matrix(shape.y1_rows, shape.y1_cols));
      ++probes;
      if (inst.a * x0 * inst.b == inst.c) ++solved;
    }
  }

  // Block shapes: x2 is (n - a) x a, y1 is b x (p - b). They vanish when A has
  // full column rank and B full row rank.
  std::size_t corrected_ok = 0, corrected_total = 0;
  std::size_t literal_ok = 0, literal_total = 0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t m = gen.dimension(1, 4), n = gen.dimension(m, 6);
    const std::size_t q = gen.dimension(1, 4), p = gen.dimension(q, 6);
    const std::size_t short_side = gen.dimension(1, 4), long_side = gen.dimension(short_side, 6);

    // Stated: A full row rank and B full column rank -> no parameters.
    const ProblemInstance stated =
        consistent_with(gen, gen.matrix_of_rank(m, n, m), gen.matrix_of_rank(p, q, q));
    ++literal_total;
    if (blocks_empty(stated)) ++literal_ok;

    // Corrected: A full column rank and B full row rank -> no parameters.
    const ProblemInstance both = consistent_with(gen, gen.matrix_of_rank(long_side, short_side, short_side),
                                                 gen.matrix_of_rank(short_side, long_side, short_side));
    // One side full rank: X0 is affine in the surviving block.
    const ProblemInstance left_only = consistent_with(
        gen, gen.matrix_of_rank(long_side, short_side, short_side), gen.deficient_matrix(p, q));
    const ProblemInstance right_only = consistent_with(
        gen, gen.deficient_matrix(m, n), gen.matrix_of_rank(short_side, long_side, short_side));
    corrected_total += 3;
    if (blocks_empty(both)) ++corrected_ok;
    if (second_difference_vanishes(gen, left_only)) ++corrected_ok;
    if (second_difference_vanishes(gen, right_only)) ++corrected_ok;
  }

  const bool ok = solved == probes && corrected_ok == corrected_total && literal_ok == literal_total;
  return {ok, "A X0 B = C on " + count(solved, probes) + "; corrected rank conditions " +
                  count(corrected_ok, corrected_total) + "; conditions as stated " +
                  count(literal_ok, literal_total)};
}

// ---- criteria 9, 10: matrix systems ------------------------------------------

Outcome common_systems() {
  InstanceGenerator gen(kSeed + 9);
  std::size_t ok = 0, with_second = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t m = gen.dimension(1, 5), n = gen.dimension(1, 5);
    const std::size_t kk = gen.dimension(1, 5), l = gen.dimension(1, 5);
    const Matrix a = gen.deficient_matrix(m, n), d = gen.deficient_matrix(kk, l);
    const Matrix hidden = gen.matrix(n, kk);
    const CommonSolutionSystem sys{a, a * hidden, d, hidden * d};
    const AffineSolutionFamily f = common_system_solve(sys);
    bool good = f.is_reproductive();
    for (int t = 0; t < 20 && good; ++t) {
      const Matrix x = f.materialize(random_like(gen, f.x0()));
      good = sys.a * x == sys.b && x * sys.d == sys.e && f.materialize(x) == x;
    }
    const auto sol = oracle::oracle_solve(oracle::vectorize_common_system(sys));
    if (sol) {
      ++with_second;
      const Matrix x0 = oracle_member(gen, *sol);
      const AffineSolutionFamily g = common_system_family_from(sys, x0);
      for (int t = 0; t < 20 && good; ++t) {
        const Matrix y = random_like(gen, f.x0());
        good = g.materialize(y - x0) == f.materialize(y);
      }
    } else {
      good = false;
    }
    if (good) ++ok;
  }
  return {ok == 50, "systems passing " + count(ok, 50) + ", second particular solution on " +
                        std::to_string(with_second)};
}

Outcome commuting_systems() {
  InstanceGenerator gen(kSeed + 10);
  std::size_t ok = 0;
  for (int k = 0; k < 20; ++k) {
    // Singular and similar to diag(J, 0) with J regular, so a commutative
    // {1}-inverse exists.
    const std::size_t n = gen.dimension(2, 5);
    const std::size_t r = gen.dimension(1, n - 1);
    const Matrix s = gen.matrix_of_rank(n, n, n);
    const Matrix core = Matrix::from_blocks(gen.matrix_of_rank(r, r, r), Matrix(r, n - r),
                                            Matrix(n - r, r), Matrix(n - r, n - r));
    const Matrix a = s * core * *inverse(s);
    const AffineSolutionFamily fam = commuting_system_solve({a});
    bool good = rank(a) < n && fam.is_reproductive();
    for (int t = 0; t < 20 && good; ++t) {
      const Matrix x = fam.materialize(gen.matrix(n, n));
      good = a * x * a == a && a * x == x * a;
    }
    if (good) ++ok;
  }
  bool nilpotent_rejected = false;
  try {
    (void)commuting_system_solve({Matrix{{0, 1}, {0, 0}}});
  } catch (const SystemInconsistent&) {
    nilpotent_rejected = true;
  }
  return {ok == 20 && nilpotent_rejected,
          "singular A " + count(ok, 20) + ", nilpotent witness " +
              (nilpotent_rejected ? "rejected" : "accepted")};
}

}  // namespace

int main() {
  {
    auto [o, t] = timed(example_scalars);
    report(1, "example dependency scalars", o, t, kExampleLimitSeconds);
  }
  {
    auto [o, t] = timed(example_verdicts);
    report(2, "example consistency verdicts", o, t, kExampleLimitSeconds);
  }
  {
    auto [o, t] = timed(example_general_c);
    report(3, "general-C pipeline", o, t, kExampleLimitSeconds);
  }

  PropertyStats stats;
  auto [unused, property_seconds] = timed([&] {
    stats = run_property_suite();
    return Outcome{true, ""};
  });
  (void)unused;
  report(4, "criterion equivalence",
         {stats.agree == stats.instances,
          "methods agree on " + count(stats.agree, stats.instances) + " (" +
              std::to_string(stats.consistent) + " consistent)"},
         property_seconds, kPropertyLimitSeconds);
  report(5, "family soundness and completeness",
         {stats.sound == stats.consistent && stats.complete == stats.consistent && stats.consistent > 0,
          "sound " + count(stats.sound, stats.consistent) + ", complete " +
              count(stats.complete, stats.consistent)},
         property_seconds, kPropertyLimitSeconds);
  {
    auto [o, t] = timed(reproductivity);
    report(6, "reproductivity", o, t, kPropertyLimitSeconds);
  }
  report(7, "dimension law",
         {stats.dimension == stats.consistent && stats.consistent > 0,
          "n p - a b = kernel dimension on " + count(stats.dimension, stats.consistent)},
         property_seconds, kPropertyLimitSeconds);
  {
    auto [o, t] = timed(reproductive_constructor);
    report(8, "reproductive X0 constructor", o, t, kPropertyLimitSeconds);
  }
  {
    auto [o, t] = timed(common_systems);
    report(9, "common solution system", o, t, kPropertyLimitSeconds);
  }
  {
    auto [o, t] = timed(commuting_systems);
    report(10, "commuting {1}-inverse system", o, t, kPropertyLimitSeconds);
  }

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
