#include <gtest/gtest.h>

#include "axbc/matrix_file.hpp"
#include "axbc/random_instances.hpp"
#include "axbc/result_document.hpp"
#include "fixtures.hpp"

using namespace axbc;

TEST(MatrixFile, ParsesCommentsBlankLinesAndFractions) {
  const Matrix m = parse_matrix("# header comment\n\n2 2\n1 -1/2\n\t3   4\r\n");
  EXPECT_EQ(m, (Matrix{{1, Rational(-1, 2)}, {3, 4}}));
}

TEST(MatrixFile, EmptyShapes) {
  EXPECT_EQ(parse_matrix("0 0\n"), Matrix(0, 0));
  EXPECT_EQ(parse_matrix("3 0\n"), Matrix(3, 0));
  EXPECT_EQ(parse_matrix("0 2\n"), Matrix(0, 2));
}

TEST(MatrixFile, ReportsLineOfBadCell) {
  try {
    (void)parse_matrix("2 2\n1 0\n0 1/0\n", "m.mat");
    FAIL() << "expected MatrixParseError";
  } catch (const MatrixParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.source(), "m.mat");
    EXPECT_NE(std::string(e.what()).find("row 2, column 2"), std::string::npos);
  }
}

TEST(MatrixFile, RejectsMalformedInput) {
  for (const char* bad : {"", "2\n1 2\n", "2 2\n1 2\n", "1 2\n1 2 3\n", "1 1\n1\n2\n",
                          "1 1\nx\n", "-1 2\n", "1 1\n1\xc3\xa9\n"}) {
    EXPECT_THROW((void)parse_matrix(bad), MatrixParseError) << bad;
  }
  EXPECT_THROW((void)read_matrix_file("/nonexistent/file.mat"), MatrixParseError);
}

TEST(MatrixFile, FormatRoundTrip) {
  InstanceGenerator gen(71);
  for (int k = 0; k < 50; ++k) {
    Matrix m = gen.matrix(gen.dimension(0, 5), gen.dimension(0, 5));
    if (m.rows() > 0 && m.cols() > 0) m = m.with(0, 0, Rational(gen.dimension(1, 9) * 2 - 9, 7));
    EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  }
}

TEST(ResultDocument, JsonRoundTrip) {
  InstanceGenerator gen(72);
  for (int k = 0; k < 50; ++k) {
    ResultDocument doc;
    doc.command = "solve";
    doc.verdict = static_cast<Verdict>(gen.dimension(0, 3));
    if (gen.coin()) doc.method_verdicts["penrose"] = gen.coin();
    if (gen.coin()) doc.rank = gen.dimension(0, 5);
    if (gen.coin()) doc.pivot_columns = {0, 2};
    if (gen.coin()) doc.matrix = gen.matrix(gen.dimension(0, 3), gen.dimension(0, 3));
    doc.particular_solution = Rational(1, 3) * gen.matrix(2, 3);
    if (gen.coin()) doc.family_form = "X = X0 + Y - L Y R";
    if (gen.coin()) doc.left_projector = gen.matrix(2, 2);
    if (gen.coin()) doc.right_projector = gen.matrix(3, 3);
    if (gen.coin()) doc.free_parameters = gen.dimension(0, 9);
    if (gen.coin()) doc.reproductive = gen.coin();
    if (gen.coin()) doc.materialized = gen.matrix(2, 3);
    if (gen.coin()) doc.failed_criteria = {"A E = B D"};
    if (gen.coin()) doc.residual = gen.matrix(1, 4);
    if (gen.coin()) doc.notes = {"n"};
    EXPECT_EQ(parse_json(serialize_json(doc)), doc);
  }
}

TEST(ResultDocument, RationalsAreFractionStrings) {
  ResultDocument doc;
  doc.command = "general-c";
  doc.matrix = Matrix{{Rational(2), Rational(-1, 3)}};
  const auto j = to_json(doc);
  EXPECT_EQ(j["matrix"]["entries"][0][0], "2/1");
  EXPECT_EQ(j["matrix"]["entries"][0][1], "-1/3");
}

TEST(ResultDocument, RejectsMalformedJson) {
  EXPECT_THROW((void)parse_json("{"), std::invalid_argument);
  EXPECT_THROW((void)parse_json(R"({"command":"x","verdict":"maybe"})"), std::invalid_argument);
  EXPECT_THROW((void)parse_json(R"({"command":"x","verdict":"none","matrix":{"rows":1,"cols":1,"entries":[]}})"),
               std::invalid_argument);
}

TEST(ResultDocument, TextRenderingOfRank) {
  ResultDocument doc;
  doc.command = "rank";
  doc.rank = 2;
  doc.pivot_columns = {0, 1};
  EXPECT_EQ(render_text(doc), "rank 2\npivot columns: 1 2\n");
}
