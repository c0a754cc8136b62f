#include "axbc/result_document.hpp"

#include <sstream>
#include <stdexcept>

namespace axbc {
namespace {

using json = nlohmann::ordered_json;

template <class T, class Fn>
void put_optional(json& j, const char* key, const std::optional<T>& value, Fn&& convert) {
  if (value) j[key] = convert(*value);
}

std::string indent_matrix(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "  (" + m.shape_string() + ")\n";
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const Rational& r : m.entries()) {
    cells.push_back(r.to_string());
    width = std::max(width, cells.back().size());
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += " ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out += ' ' + std::string(width - c.size(), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNone: return "none";
    case Verdict::kConsistent: return "consistent";
    case Verdict::kInconsistent: return "inconsistent";
    case Verdict::kSystemInconsistent: return "system-inconsistent";
  }
  return "none";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::kNone, Verdict::kConsistent, Verdict::kInconsistent,
                    Verdict::kSystemInconsistent}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_fraction_string());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix row count mismatch");
    std::vector<Rational> flat;
    flat.reserve(rows * cols);
    for (const json& row : entries) {
      if (row.size() != cols) throw std::invalid_argument("matrix column count mismatch");
      for (const json& cell : row) flat.push_back(Rational::parse(cell.get<std::string>()));
    }
    return {rows, cols, std::move(flat)};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
  }
}

json to_json(const ResultDocument& doc) {
  json j;
  j["command"] = doc.command;
  j["verdict"] = to_string(doc.verdict);
  if (!doc.method_verdicts.empty()) {
    json methods;
    for (const auto& [name, ok] : doc.method_verdicts) {
      methods[name] = to_string(ok ? Verdict::kConsistent : Verdict::kInconsistent);
    }
    j["methods"] = std::move(methods);
  }
  if (doc.rank) j["rank"] = *doc.rank;
  if (!doc.pivot_columns.empty()) j["pivot_columns"] = doc.pivot_columns;
  put_optional(j, "matrix", doc.matrix, matrix_to_json);
  put_optional(j, "particular_solution", doc.particular_solution, matrix_to_json);
  if (!doc.family_form.empty()) j["family_form"] = doc.family_form;
  put_optional(j, "left_projector", doc.left_projector, matrix_to_json);
  put_optional(j, "right_projector", doc.right_projector, matrix_to_json);
  if (doc.free_parameters) j["free_parameters"] = *doc.free_parameters;
  if (doc.reproductive) j["reproductive"] = *doc.reproductive;
  put_optional(j, "materialized", doc.materialized, matrix_to_json);
  if (!doc.failed_criteria.empty()) j["failed_criteria"] = doc.failed_criteria;
  put_optional(j, "residual", doc.residual, matrix_to_json);
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  return j;
}

ResultDocument result_from_json(const json& j) {
  try {
    ResultDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (j.contains("methods")) {
      for (const auto& [name, v] : j.at("methods").items()) {
        doc.method_verdicts[name] = verdict_from_string(v.get<std::string>()) == Verdict::kConsistent;
      }
    }
    if (j.contains("rank")) doc.rank = j.at("rank").get<std::size_t>();
    if (j.contains("pivot_columns")) {
      doc.pivot_columns = j.at("pivot_columns").get<std::vector<std::size_t>>();
    }
    auto matrix_field = [&](const char* key, std::optional<Matrix>& out) {
      if (j.contains(key)) out = matrix_from_json(j.at(key));
    };
    matrix_field("matrix", doc.matrix);
    matrix_field("particular_solution", doc.particular_solution);
    if (j.contains("family_form")) doc.family_form = j.at("family_form").get<std::string>();
    matrix_field("left_projector", doc.left_projector);
    matrix_field("right_projector", doc.right_projector);
    if (j.contains("free_parameters")) doc.free_parameters = j.at("free_parameters").get<std::size_t>();
    if (j.contains("reproductive")) doc.reproductive = j.at("reproductive").get<bool>();
    matrix_field("materialized", doc.materialized);
    if (j.contains("failed_criteria")) {
      doc.failed_criteria = j.at("failed_criteria").get<std::vector<std::string>>();
    }
    matrix_field("residual", doc.residual);
    if (j.contains("notes")) doc.notes = j.at("notes").get<std::vector<std::string>>();
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed result document: ") + e.what());
  }
}

std::string serialize_json(const ResultDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ResultDocument parse_json(const std::string& text) {
  try {
    return result_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

std::string render_text(const ResultDocument& doc) {
  std::ostringstream out;
  if (doc.verdict != Verdict::kNone) out << "verdict: " << to_string(doc.verdict) << '\n';
  for (const auto& [name, ok] : doc.method_verdicts) {
    out << "  " << name << ": " << (ok ? "consistent" : "inconsistent") << '\n';
  }
  if (doc.rank) out << "rank " << *doc.rank << '\n';
  if (doc.rank) {
    out << "pivot columns:";
    for (std::size_t c : doc.pivot_columns) out << ' ' << c + 1;
    out << '\n';
  }
  if (doc.matrix) out << "matrix:\n" << indent_matrix(*doc.matrix);
  if (doc.particular_solution) out << "X0:\n" << indent_matrix(*doc.particular_solution);
  if (!doc.family_form.empty()) out << "family: " << doc.family_form << '\n';
  if (doc.left_projector) out << "L:\n" << indent_matrix(*doc.left_projector);
  if (doc.right_projector) out << "R:\n" << indent_matrix(*doc.right_projector);
  if (doc.free_parameters) out << "free parameters: " << *doc.free_parameters << '\n';
  if (doc.reproductive) {
    out << "family is " << (*doc.reproductive ? "reproductive" : "non-reproductive") << '\n';
  }
  if (doc.materialized) out << "X(Y):\n" << indent_matrix(*doc.materialized);
  for (const auto& c : doc.failed_criteria) out << "failed: " << c << '\n';
  if (doc.residual) out << "residual:\n" << indent_matrix(*doc.residual);
  for (const auto& n : doc.notes) out << "note: " << n << '\n';
  return out.str();
}

}  // namespace axbc
