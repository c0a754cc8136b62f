#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axbc/matrix.hpp"

namespace axbc {

enum class Verdict { kNone, kConsistent, kInconsistent, kSystemInconsistent };

std::string to_string(Verdict v);
/// Throws std::invalid_argument on an unknown name.
Verdict verdict_from_string(const std::string& s);

/// Machine-readable outcome of one CLI command. Field order in the JSON and
/// text renderings is fixed. Rationals are serialized as "num/den" strings.
struct ResultDocument {
  std::string command;
  Verdict verdict = Verdict::kNone;
  std::map<std::string, bool> method_verdicts;  ///< method name -> consistent
  std::optional<std::size_t> rank;
  std::vector<std::size_t> pivot_columns;
  std::optional<Matrix> matrix;  ///< main matrix output (e.g. a generated C)
  std::optional<Matrix> particular_solution;
  std::string family_form;  ///< operator description, e.g. "X = X0 + Y - L Y R"
  std::optional<Matrix> left_projector;
  std::optional<Matrix> right_projector;
  std::optional<std::size_t> free_parameters;
  std::optional<bool> reproductive;
  std::optional<Matrix> materialized;
  std::vector<std::string> failed_criteria;
  std::optional<Matrix> residual;
  std::vector<std::string> notes;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

nlohmann::ordered_json matrix_to_json(const Matrix& m);
/// Throws std::invalid_argument on malformed input.
Matrix matrix_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const ResultDocument& doc);
ResultDocument result_from_json(const nlohmann::ordered_json& j);

std::string serialize_json(const ResultDocument& doc);
ResultDocument parse_json(const std::string& text);

std::string render_text(const ResultDocument& doc);

}  // namespace axbc
