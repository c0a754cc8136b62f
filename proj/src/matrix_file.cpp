#include "axbc/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace axbc {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view field, const std::string& source, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw MatrixParseError(source, line, "bad dimension '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Matrix parse_matrix(std::string_view text, const std::string& source) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::size_t data_rows = 0;
  std::vector<Rational> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    for (char ch : line) {
      if (static_cast<unsigned char>(ch) > 0x7f || ch == '\r') {
        throw MatrixParseError(source, line_no, "non-ASCII or stray control byte");
      }
    }
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 2) {
        throw MatrixParseError(source, line_no, "header must be 'rows cols'");
      }
      rows = parse_count(fields[0], source, line_no);
      cols = parse_count(fields[1], source, line_no);
      have_header = true;
      entries.reserve(rows * cols);
      continue;
    }
    if (data_rows == rows || cols == 0) {
      throw MatrixParseError(source, line_no, "unexpected data after " + std::to_string(rows) +
                                                  " rows");
    }
    if (fields.size() != cols) {
      throw MatrixParseError(source, line_no,
                             "row " + std::to_string(data_rows + 1) + " has " +
                                 std::to_string(fields.size()) + " entries, expected " +
                                 std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        entries.push_back(Rational::parse(fields[j]));
      } catch (const std::invalid_argument& e) {
        throw MatrixParseError(source, line_no,
                               "row " + std::to_string(data_rows + 1) + ", column " +
                                   std::to_string(j + 1) + ": " + e.what());
      }
    }
    ++data_rows;
  }
  if (!have_header) throw MatrixParseError(source, line_no, "missing 'rows cols' header");
  if (cols != 0 && data_rows != rows) {
    throw MatrixParseError(source, line_no, "expected " + std::to_string(rows) + " rows, found " +
                                                std::to_string(data_rows));
  }
  return {rows, cols, std::move(entries)};
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatrixParseError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str(), path);
}

std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  if (m.cols() == 0) return out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace axbc
