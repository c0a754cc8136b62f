#pragma once

// Plain-text matrix files.
//
//   # optional comment lines start with '#'
//   rows cols
//   r1c1 r1c2 ...
//   ...
//
// ASCII only; LF or CRLF line endings; entries separated by spaces or tabs;
// entries are rational literals "3", "-1", "2/5". Blank lines and comment
// lines are skipped anywhere. A matrix with zero columns has no data lines.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "axbc/matrix.hpp"

namespace axbc {

class MatrixParseError : public std::runtime_error {
 public:
  MatrixParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}
  [[nodiscard]] const std::string& source() const { return source_; }
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// `source` only labels error messages.
Matrix parse_matrix(std::string_view text, const std::string& source = "<input>");

/// Throws MatrixParseError (line 0) when the file cannot be read.
Matrix read_matrix_file(const std::string& path);

/// Canonical form: header, then one LF-terminated line per row, entries in
/// shortest exact form separated by single spaces.
std::string format_matrix(const Matrix& m);

}  // namespace axbc
