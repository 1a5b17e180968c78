#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yt/oracles.hpp"
#include "yt/tableau.hpp"

using namespace yt;
using yt::test::a0;
using yt::test::error_of;
using yt::test::T;

TEST(Partition, TrailingZerosAreNeutral) {
  EXPECT_TRUE(same_partition({2, 1}, {2, 1, 0}));
  EXPECT_FALSE(same_partition({2, 1}, {2, 2}));
  EXPECT_TRUE(is_partition({3, 3, 1, 0}));
  EXPECT_FALSE(is_partition({1, 2}));
  EXPECT_EQ(total({3, 2, 1}), 6);
  EXPECT_EQ(length({3, 0}), 1u);
}

TEST(Partition, EnumerationCounts) {
  EXPECT_EQ(partitions_of(5, 5).size(), 7u);
  EXPECT_EQ(partitions_of(6, 3).size(), 7u);
  EXPECT_EQ(subpartitions({2, 1}).size(), 5u);
}

TEST(FromRows, GtPatternOfNormalTableau) {
  Tableau t = T({2, 1}, {{1, 1}, {2}});
  EXPECT_EQ(t.gt(), (Rows{{0, 2, 2}, {0, 0, 1}}));
}

TEST(FromRows, SkewTableauIsValid) {
  Tableau t = a0();
  EXPECT_EQ(trim(t.outer()), (Partition{2, 1}));
  EXPECT_EQ(trim(t.inner()), (Partition{1}));
  EXPECT_EQ(t.cells(), (Rows{{1}, {2}}));
}

TEST(FromRows, ColumnViolationNamesTheCell) {
  try {
    T({1, 1}, {{1}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ColumnOrderViolation);
    EXPECT_NE(e.detail().find("(2,1)"), std::string::npos) << e.detail();
  }
}

TEST(FromRows, RowAndShapeErrors) {
  EXPECT_EQ(error_of([] { T({2}, {{2, 1}}); }), ErrorKind::RowOrderViolation);
  EXPECT_EQ(error_of([] { T({2}, {{1}}); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(error_of([] { T({1}, {2}, {{}}); }), ErrorKind::ShapeMismatch);
}

TEST(Word, ReadsRowsRightToLeftTopFirst) {
  EXPECT_EQ(word(T({2, 1}, {{1, 1}, {2}})), (std::vector<int64_t>{1, 1, 2}));
  EXPECT_EQ(word(a0()), (std::vector<int64_t>{1, 2}));
  EXPECT_EQ(word(T({2, 1}, {{1, 2}, {2}})), (std::vector<int64_t>{2, 1, 2}));
}

TEST(IsLr, Examples) {
  EXPECT_TRUE(is_lr(a0()));
  EXPECT_FALSE(is_lr(T({2}, {1}, {{2}})));
  EXPECT_TRUE(is_lr(Tableau::canonical({3, 2})));
}

TEST(Canonical, Examples) {
  EXPECT_EQ(Tableau::canonical({2, 1}), T({2, 1}, {{1, 1}, {2}}));
  EXPECT_TRUE(Tableau::canonical({}).is_empty());
  EXPECT_EQ(Tableau::canonical({3, 3, 1}), T({3, 3, 1}, {{1, 1, 1}, {2, 2, 2}, {3}}));
}

TEST(Compose, TwoBoxesOnAnAntidiagonal) {
  Tableau one = T({1}, {{1}});
  EXPECT_EQ(compose(one, one, 1, 0), T({2, 1}, {1}, {{1}, {1}}));
  EXPECT_EQ(compose(one, one), T({2, 1}, {1}, {{1}, {1}}));
}

TEST(Compose, RowOverColumn) {
  Tableau c = compose(Tableau::canonical({1, 1}), Tableau::canonical({2}), 1, 0);
  EXPECT_EQ(c, T({3, 1, 1}, {1}, {{1, 1}, {1}, {2}}));
}

TEST(Compose, GapRowsAreEmptyRowsOfWidthA) {
  Tableau c = compose(Tableau::canonical({1, 1}), Tableau::canonical({2}), 1, 2);
  EXPECT_EQ(c, T({3, 1, 1, 1, 1}, {1, 1, 1}, {{1, 1}, {}, {}, {1}, {2}}));
}

TEST(Compose, EmptyIsIdentity) {
  Tableau t = T({3, 1}, {1}, {{1, 2}, {2}});
  EXPECT_EQ(compose(Tableau::empty({}), t), t);
  EXPECT_EQ(compose(t, Tableau::empty({})), t);
}

TEST(Compose, OverlapIsRejected) {
  Tableau two = Tableau::canonical({2});
  EXPECT_EQ(error_of([&] { compose(two, two, 1, 0); }), ErrorKind::OffsetTooSmall);
}

TEST(Attach, UnionOfNestedTableaux) {
  EXPECT_EQ(attach(Tableau::canonical({1}), T({2, 1}, {1}, {{2}, {2}})), T({2, 1}, {{1, 2}, {2}}));
}

TEST(Attach, EmptyInnerPartIsNeutral) {
  Tableau t = a0();
  EXPECT_EQ(attach(Tableau::empty({1}), t), t);
}

TEST(Attach, Errors) {
  EXPECT_EQ(error_of([] { attach(Tableau::canonical({2}), a0()); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(error_of([] { attach(T({1}, {{2}}), T({2}, {1}, {{1}})); }), ErrorKind::OrderViolation);
}

TEST(SplitAtValue, Examples) {
  Tableau t = T({2, 1}, {{1, 2}, {2}});
  auto [lo, hi] = split_at_value(t, 1);
  EXPECT_EQ(lo, T({1}, {{1}}));
  EXPECT_EQ(hi, T({2, 1}, {1}, {{2}, {2}}));
  auto [all, none] = split_at_value(t, 2);
  EXPECT_EQ(all, t);
  EXPECT_TRUE(none.is_empty());
  auto [none2, all2] = split_at_value(t, 0);
  EXPECT_TRUE(none2.is_empty());
  EXPECT_EQ(all2, t);
}

TEST(ShiftValues, Examples) {
  EXPECT_EQ(shift_values(T({1}, {{1}}), 2), T({1}, {{3}}));
  EXPECT_EQ(shift_values(a0(), 0), a0());
  EXPECT_EQ(error_of([] { shift_values(T({1}, {{1}}), -1); }), ErrorKind::UnderflowBelowOne);
  EXPECT_EQ(shift_values(T({1}, {{3}}), -2), T({1}, {{1}}));
}

TEST(Rotate180, Examples) {
  EXPECT_EQ(rotate180(Tableau::canonical({2, 1})), T({2, 2}, {1}, {{1}, {2, 2}}));
  EXPECT_EQ(rotate180(Tableau::canonical({1})), T({1}, {{1}}));
  EXPECT_EQ(rotate180(T({2}, {{1, 1}})), T({2}, {{1, 1}}));
  EXPECT_EQ(error_of([] { rotate180(a0()); }), ErrorKind::SkewInputNotSupported);
}

TEST(Recording, Examples) {
  EXPECT_EQ(T({2, 1}, {{1, 1}, {2}}).recording(), (Rows{{2, 0}, {0, 1}}));
  Tableau t = a0();
  EXPECT_EQ(Tableau::from_recording(t.inner(), t.recording()), t);
  EXPECT_EQ(error_of([] { Tableau::from_recording({0, 0}, {{0, 1}, {1, 0}}); }), ErrorKind::NotATableau);
}

TEST(RowSlice, SliceAndStackRoundTrip) {
  Tableau t = T({3, 2, 1}, {1}, {{1, 2}, {2, 3}, {4}});
  EXPECT_EQ(stack_rows(row_slice(t, 0, 1), row_slice(t, 1, 3)), t);
}

TEST(Equality, IgnoresAlphabetAndPadding) {
  Tableau t = a0();
  EXPECT_EQ(t.with_alphabet(5), t);
  EXPECT_EQ(t.with_rows(4), t);
  EXPECT_NE(t, T({2, 1}, {1}, {{1}, {1}}));
}

class TableauSuite : public ::testing::Test {
 protected:
  static const std::vector<Tableau>& suite() {
    static const auto s = oracle::tableau_suite({});
    return s;
  }
};

TEST_F(TableauSuite, WeightMatchesWordCounts) {
  for (const auto& t : suite()) {
    Weight w(t.alphabet(), 0);
    for (auto x : word(t)) ++w[x - 1];
    ASSERT_EQ(w, t.weight()) << t.gt().size();
  }
}

TEST_F(TableauSuite, RecordingRoundTrip) {
  for (const auto& t : suite()) ASSERT_EQ(Tableau::from_recording(t.inner(), t.recording()), t);
}

TEST_F(TableauSuite, AttachInvertsSplit) {
  for (const auto& t : suite())
    for (int r = 0; r <= t.alphabet(); ++r) {
      auto [lo, hi] = split_at_value(t, r);
      ASSERT_EQ(attach(lo, hi), t);
    }
}

TEST_F(TableauSuite, RotateIsAnInvolutionOnNormalShapes) {
  for (const auto& t : suite()) {
    if (!t.is_normal()) continue;
    Tableau r = rotate180(t);
    ASSERT_EQ(reversed(r.weight()), t.weight());
    // The rotated tableau sits in a box; rotate back by rectifying the frame.
    Tableau back = Tableau::from_recording({}, [&] {
      Rows c = r.recording();
      Rows out(c.size(), std::vector<int64_t>(c.empty() ? 0 : c[0].size()));
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j) out[c.size() - 1 - i][c[i].size() - 1 - j] = c[i][j];
      return out;
    }());
    ASSERT_EQ(back, t);
  }
}

TEST(LrSets, NormalShapeHasOnlyTheCanonicalTableau) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n, 4)) {
      EXPECT_TRUE(is_lr(Tableau::canonical(lambda)));
      for (const auto& nu : partitions_of(n, 6))
        EXPECT_EQ(oracle::lr_coefficient(lambda, {}, nu), same_partition(lambda, nu) ? 1 : 0);
    }
}
