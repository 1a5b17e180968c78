#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yt/io.hpp"
#include "yt/oracles.hpp"

using namespace yt;
using yt::test::a0;
using yt::test::T;

TEST(Text, TableauBlock) {
  EXPECT_EQ(to_text(a0()), "lambda: 2 1\nmu: 1\n. 1\n2\n");
  EXPECT_EQ(parse_tableau("lambda: 2 1\nmu: 1\n. 1\n2\n"), a0());
  EXPECT_EQ(parse_tableau("lambda: 2 1\n1 1\n2\n"), Tableau::canonical({2, 1}));
}

TEST(Text, AlphabetLineIsKept) {
  Tableau t = T({1}, {{1}}, 3);
  std::string s = to_text(t);
  EXPECT_NE(s.find("k: 3"), std::string::npos);
  EXPECT_EQ(parse_tableau(s).alphabet(), 3);
}

TEST(Text, EmptyRowsAreEmptyLines) {
  Tableau t = T({2, 1}, {2}, {{}, {1}});
  Tableau back = parse_tableau(to_text(t));
  EXPECT_EQ(back, t);
}

TEST(Text, MatrixAndPlane) {
  IntMatrix m = IntMatrix::from_rows({{1, 0}, {2, 1}});
  EXPECT_EQ(to_text(m), "matrix: 2\n1 0\n2 1\n");
  EXPECT_EQ(parse_matrix(to_text(m)), m);
  PlaneFunction p{{2, 1}, {{0, 1}, {2}}};
  EXPECT_EQ(parse_plane(to_text(p)), p);
}

TEST(Text, SeveralBlocks) {
  auto items = parse_items("lambda: 1\n1\n\nmatrix: 1\n4\n", Format::Text);
  ASSERT_EQ(items.size(), 2u);
  EXPECT_STREQ(item_kind(items[0]), "tableau");
  EXPECT_STREQ(item_kind(items[1]), "matrix");
}

TEST(Json, Mirror) {
  std::string j = to_json(a0());
  EXPECT_EQ(parse_tableau(j, Format::Json), a0());
  EXPECT_EQ(parse_tableau(R"({"lambda":[2,1],"mu":[1],"rows":[[null,1],[2]]})", Format::Json), a0());
  IntMatrix m = IntMatrix::from_rows({{1, 2}, {0, 3}});
  EXPECT_EQ(parse_matrix(to_json(m), Format::Json), m);
  auto items = parse_items(R"([{"matrix":[[1]]},{"shape":[1],"values":[[2]]}])", Format::Json);
  ASSERT_EQ(items.size(), 2u);
  EXPECT_STREQ(item_kind(items[1]), "plane");
}

TEST(ParseErrors, ReportLineAndColumn) {
  try {
    parse_tableau("lambda: 2 1\n1 x\n2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
  try {
    parse_items("{\"lambda\": [2,\n ]}", Format::Json);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(ParseErrors, MalformedBlocks) {
  EXPECT_THROW(parse_tableau("lambda: 2 1\n1 1 1\n2\n"), Error);
  EXPECT_THROW(parse_tableau("lambda 2\n1 1\n"), ParseError);
  EXPECT_THROW(parse_matrix("matrix: 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_tableau(""), ParseError);
}

TEST(ParseErrors, DomainErrorsStayDomainErrors) {
  try {
    parse_tableau("lambda: 1 1\n1\n1\n");
    FAIL();
  } catch (const ParseError&) {
    FAIL() << "column violation reported as a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ColumnOrderViolation);
  }
}

TEST(RoundTrip, WholeSuiteBothFormats) {
  for (const auto& t : oracle::tableau_suite({})) {
    for (Format f : {Format::Text, Format::Json}) {
      std::string s = emit_items({t}, f);
      auto back = parse_items(s, f);
      ASSERT_EQ(back.size(), 1u);
      const Tableau& u = std::get<Tableau>(back[0]);
      ASSERT_EQ(u, t);
      ASSERT_EQ(u.alphabet(), t.alphabet());
      ASSERT_EQ(emit_items(back, f), s);
    }
  }
  for (const auto& m : oracle::matrix_suite(2, 2))
    for (Format f : {Format::Text, Format::Json}) {
      std::string s = emit_items({m}, f);
      ASSERT_EQ(std::get<IntMatrix>(parse_items(s, f)[0]), m);
    }
}
