// axbc: command-line front end for the AXB = C library.
//
// Exit codes: 0 success, 1 mathematically inconsistent input,
// 2 usage / parse / shape error, 3 internal invariant breach.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "axbc/elimination.hpp"
#include "axbc/matrix_file.hpp"
#include "axbc/oracle.hpp"
#include "axbc/random_instances.hpp"
#include "axbc/result_document.hpp"
#include "axbc/solver.hpp"
#include "axbc/systems.hpp"

namespace {

using namespace axbc;

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

constexpr const char* kSandwichForm = "X = X0 + Y - L Y R";
constexpr const char* kProjectedForm = "X = X0 + (I - L) Y (I - R)";

struct Common {
  std::string format = "text";
};

int emit(const ResultDocument& doc, const Common& opts, int code) {
  std::cout << (opts.format == "json" ? serialize_json(doc) : render_text(doc));
  return code;
}

ProblemInstance load_instance(const std::string& a, const std::string& b, const std::string& c) {
  ProblemInstance inst{read_matrix_file(a), read_matrix_file(b), read_matrix_file(c)};
  if (inst.a.rows() != inst.c.rows() || inst.b.cols() != inst.c.cols()) inst.validate();
  return inst;
}

// "--y 0" means the zero matrix unless a file literally named "0" exists.
Matrix load_parameter(const std::string& path, std::size_t rows, std::size_t cols) {
  if (path == "0" && !std::filesystem::exists(path)) return Matrix::zero(rows, cols);
  return read_matrix_file(path);
}

void describe_family(ResultDocument& doc, const AffineSolutionFamily& fam) {
  doc.particular_solution = fam.x0();
  doc.family_form =
      fam.form() == AffineSolutionFamily::Form::kSandwich ? kSandwichForm : kProjectedForm;
  doc.left_projector = fam.left_proj();
  doc.right_projector = fam.right_proj();
  doc.free_parameters = fam.free_parameter_count();
}

int cmd_rank(const std::string& path, const Common& opts) {
  const Matrix m = read_matrix_file(path);
  const EliminationResult e = eliminate(m);
  ResultDocument doc;
  doc.command = "rank";
  doc.rank = e.rank;
  doc.pivot_columns = e.pivot_columns;
  return emit(doc, opts, kOk);
}

int cmd_check(const std::string& a, const std::string& b, const std::string& c,
              const std::string& method, const Common& opts) {
  const ProblemInstance inst = load_instance(a, b, c);
  ResultDocument doc;
  doc.command = "check";
  const bool all = method == "all";
  if (all || method == "penrose") doc.method_verdicts["penrose"] = penrose_consistent(inst);
  if (all || method == "structured") {
    const auto violations = structured_violations(inst);
    doc.method_verdicts["structured"] = violations.empty();
    for (const auto& v : violations) {
      doc.notes.push_back("C(" + std::to_string(v.row + 1) + "," + std::to_string(v.col + 1) +
                          ") = " + v.actual.to_string() + " but the dependency relations require " +
                          v.expected.to_string());
    }
  }
  if (all || method == "oracle") {
    doc.method_verdicts["oracle"] = oracle::oracle_solve(oracle::vectorize_axbc(inst)).has_value();
  }
  const bool first = doc.method_verdicts.begin()->second;
  for (const auto& [name, ok] : doc.method_verdicts) {
    if (ok != first) {
      std::cerr << "internal disagreement between consistency methods\n";
      emit(doc, opts, kInternal);
      return kInternal;
    }
  }
  doc.verdict = first ? Verdict::kConsistent : Verdict::kInconsistent;
  return emit(doc, opts, first ? kOk : kInconsistent);
}

int cmd_solve(const std::string& a, const std::string& b, const std::string& c,
              const std::optional<std::string>& x0_path, const std::optional<std::string>& y_path,
              const Common& opts) {
  const ProblemInstance inst = load_instance(a, b, c);
  ResultDocument doc;
  doc.command = "solve";
  std::optional<AffineSolutionFamily> fam;
  try {
    fam = penrose_general_solution(inst);
  } catch (const ConsistencyError& e) {
    doc.verdict = Verdict::kInconsistent;
    doc.failed_criteria.emplace_back("A A(1) C B(1) B = C");
    doc.residual = e.residual();
    return emit(doc, opts, kInconsistent);
  }
  if (x0_path) {
    const Matrix x0 = read_matrix_file(*x0_path);
    fam = general_solution_from(inst, x0);
  }
  doc.verdict = Verdict::kConsistent;
  describe_family(doc, *fam);
  doc.reproductive = is_reproductive(*fam, inst);
  if (y_path) {
    doc.materialized = fam->materialize(load_parameter(*y_path, fam->x0().rows(), fam->x0().cols()));
  }
  return emit(doc, opts, kOk);
}

int cmd_general_c(const std::string& a, const std::string& b, const std::string& c1,
                  const Common& opts) {
  ResultDocument doc;
  doc.command = "general-c";
  doc.matrix = build_consistent_c(read_matrix_file(a), read_matrix_file(b), read_matrix_file(c1));
  return emit(doc, opts, kOk);
}

int report_system(ResultDocument& doc, const AffineSolutionFamily& fam, const std::optional<std::string>& y_path,
                  const Common& opts) {
  doc.verdict = Verdict::kConsistent;
  describe_family(doc, fam);
  doc.reproductive = fam.is_reproductive();
  if (y_path) {
    doc.materialized = fam.materialize(load_parameter(*y_path, fam.x0().rows(), fam.x0().cols()));
  }
  return emit(doc, opts, kOk);
}

int cmd_system_common(const std::string& a, const std::string& b, const std::string& d,
                      const std::string& e, const std::optional<std::string>& y_path,
                      const Common& opts) {
  const CommonSolutionSystem sys{read_matrix_file(a), read_matrix_file(b), read_matrix_file(d),
                                 read_matrix_file(e)};
  ResultDocument doc;
  doc.command = "system common";
  try {
    return report_system(doc, common_system_solve(sys), y_path, opts);
  } catch (const SystemInconsistent& err) {
    doc.verdict = Verdict::kSystemInconsistent;
    doc.failed_criteria = err.failed_criteria();
    return emit(doc, opts, kInconsistent);
  }
}

int cmd_system_commuting(const std::string& a, const std::optional<std::string>& y_path,
                         const Common& opts) {
  const CommutingSystem sys{read_matrix_file(a)};
  ResultDocument doc;
  doc.command = "system commuting";
  try {
    return report_system(doc, commuting_system_solve(sys), y_path, opts);
  } catch (const SystemInconsistent& err) {
    doc.verdict = Verdict::kSystemInconsistent;
    doc.failed_criteria = err.failed_criteria();
    return emit(doc, opts, kInconsistent);
  }
}

int cmd_selfcheck(std::uint64_t seed, std::size_t count, std::size_t max_dim, const Common& opts) {
  InstanceGenerator gen(seed);
  std::size_t consistent = 0;
  std::size_t disagreements = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const ProblemInstance inst = gen.instance(max_dim, k % 2 == 0, gen.coin());
    const bool penrose = penrose_consistent(inst);
    const bool structured = structured_consistent(inst);
    const auto oracle_result = oracle::oracle_solve(oracle::vectorize_axbc(inst));
    if (penrose != structured || penrose != oracle_result.has_value()) {
      ++disagreements;
      continue;
    }
    if (!penrose) continue;
    ++consistent;
    const AffineSolutionFamily fam = penrose_general_solution(inst);
    const Matrix y = gen.matrix(fam.x0().rows(), fam.x0().cols());
    if (inst.a * fam.materialize(y) * inst.b != inst.c || !is_reproductive(fam, inst) ||
        fam.free_parameter_count() != oracle_result->kernel.size()) {
      ++disagreements;
    }
  }
  ResultDocument doc;
  doc.command = "selfcheck";
  doc.notes.push_back("seed " + std::to_string(seed) + ", " + std::to_string(count) +
                      " instances, " + std::to_string(consistent) + " consistent");
  doc.notes.push_back(std::to_string(disagreements) + " invariant violations");
  return emit(doc, opts, disagreements == 0 ? kOk : kInternal);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the matrix equation A X B = C"};
  app.require_subcommand(1);
  Common opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string path_a, path_b, path_c, path_d, path_e, method = "all";
  std::optional<std::string> x0_path, y_path;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_dim = 6;

  auto* rank_cmd = app.add_subcommand("rank", "Rank and pivot columns of a matrix file");
  rank_cmd->add_option("matrix", path_a)->required();

  auto* check_cmd = app.add_subcommand("check", "Decide whether A X B = C is consistent");
  check_cmd->add_option("A", path_a)->required();
  check_cmd->add_option("B", path_b)->required();
  check_cmd->add_option("C", path_c)->required();
  check_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"penrose", "structured", "oracle", "all"}))
      ->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "General solution family of A X B = C");
  solve_cmd->add_option("A", path_a)->required();
  solve_cmd->add_option("B", path_b)->required();
  solve_cmd->add_option("C", path_c)->required();
  solve_cmd->add_option("--x0", x0_path, "Particular solution to build the family around");
  solve_cmd->add_option("--y", y_path, "Parameter matrix to materialize (\"0\" for zero)");

  auto* general_c_cmd =
      app.add_subcommand("general-c", "Consistent C built from a free rank(A) x rank(B) block");
  general_c_cmd->add_option("A", path_a)->required();
  general_c_cmd->add_option("B", path_b)->required();
  general_c_cmd->add_option("C1", path_c)->required();

  auto* system_cmd = app.add_subcommand("system", "Matrix systems related to A X B = C");
  system_cmd->require_subcommand(1);
  auto* common_cmd = system_cmd->add_subcommand("common", "A X = B and X D = E");
  common_cmd->add_option("A", path_a)->required();
  common_cmd->add_option("B", path_b)->required();
  common_cmd->add_option("D", path_d)->required();
  common_cmd->add_option("E", path_e)->required();
  common_cmd->add_option("--y", y_path, "Parameter matrix to materialize (\"0\" for zero)");
  auto* commuting_cmd = system_cmd->add_subcommand("commuting", "A X A = A and A X = X A");
  commuting_cmd->add_option("A", path_a)->required();
  commuting_cmd->add_option("--y", y_path, "Parameter matrix to materialize (\"0\" for zero)");

  auto* selfcheck_cmd =
      app.add_subcommand("selfcheck", "Randomized agreement check of all consistency methods");
  selfcheck_cmd->add_option("--seed", seed)->capture_default_str();
  selfcheck_cmd->add_option("--count", count)->capture_default_str();
  selfcheck_cmd->add_option("--max-dim", max_dim)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rank_cmd) return cmd_rank(path_a, opts);
    if (*check_cmd) return cmd_check(path_a, path_b, path_c, method, opts);
    if (*solve_cmd) return cmd_solve(path_a, path_b, path_c, x0_path, y_path, opts);
    if (*general_c_cmd) return cmd_general_c(path_a, path_b, path_c, opts);
    if (*common_cmd) return cmd_system_common(path_a, path_b, path_d, path_e, y_path, opts);
    if (*commuting_cmd) return cmd_system_commuting(path_a, y_path, opts);
    if (*selfcheck_cmd) return cmd_selfcheck(seed, count, max_dim, opts);
  } catch (const NotASolutionError& e) {
    std::cerr << "error: " << e.what() << "\nresidual:\n" << format_matrix(e.residual());
    return kUsage;
  } catch (const MatrixParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
