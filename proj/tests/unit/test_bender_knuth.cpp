#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yt/bender_knuth.hpp"
#include "yt/oracles.hpp"

using namespace yt;
using yt::test::a0;
using yt::test::error_of;
using yt::test::T;

TEST(Bk, TogglesFreeLetters) {
  EXPECT_EQ(bk(T({2, 1}, {{1, 1}, {2}}), 1), T({2, 1}, {{1, 2}, {2}}));
  EXPECT_EQ(bk(T({2, 1}, {{1, 2}, {2}}), 1), T({2, 1}, {{1, 1}, {2}}));
  EXPECT_EQ(bk(bk(a0(), 1), 1), a0());
}

TEST(Bk, IndexOutOfRange) {
  EXPECT_EQ(error_of([] { bk(a0(), 2); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(error_of([] { bk(a0(), 0); }), ErrorKind::IndexOutOfRange);
}

TEST(BkWord, Application) {
  Tableau t = T({2, 1}, {{1, 1}, {2}});
  EXPECT_EQ(apply_bk_word(t, {}), t);
  EXPECT_EQ(apply_bk_word(t, {1, 1}), t);
  EXPECT_EQ(apply_bk_word(t, z_word(2)), T({2, 1}, {{1, 2}, {2}}));
}

TEST(BkWord, RightmostFactorFirst) {
  Tableau t = T({3}, {{1, 2, 3}});
  EXPECT_EQ(apply_bk_word(t, {1, 2}), bk(bk(t, 2), 1));
}

TEST(BkWord, Words) {
  EXPECT_EQ(z_word(1), BkWord{});
  EXPECT_EQ(z_word(3), (BkWord{1, 2, 1}));
  EXPECT_EQ(z_word(4), (BkWord{1, 2, 1, 3, 2, 1}));
  EXPECT_EQ(t_word(1, 1), (BkWord{1}));
  EXPECT_EQ(t_word(1, 2), (BkWord{2, 1}));
  EXPECT_EQ(t_word(2, 2), (BkWord{2, 3, 1, 2}));
}

class BkSuite : public ::testing::Test {
 protected:
  static const std::vector<Tableau>& suite() {
    static const auto s = oracle::tableau_suite({});
    return s;
  }
};

TEST_F(BkSuite, CoversThousandsOfInstances) { EXPECT_GT(suite().size(), 3000u); }

TEST_F(BkSuite, GeneratorsAreInvolutions) {
  for (const auto& t : suite())
    for (int r = 1; r < t.alphabet(); ++r) ASSERT_EQ(bk(bk(t, r), r), t);
}

TEST_F(BkSuite, DistantGeneratorsCommute) {
  for (const auto& t : suite())
    for (int i = 1; i < t.alphabet(); ++i)
      for (int j = i + 2; j < t.alphabet(); ++j) ASSERT_EQ(bk(bk(t, i), j), bk(bk(t, j), i));
}

TEST_F(BkSuite, WeightTransposition) {
  for (const auto& t : suite())
    for (int r = 1; r < t.alphabet(); ++r) {
      Weight w = t.weight();
      std::swap(w[r - 1], w[r]);
      ASSERT_EQ(bk(t, r).weight(), w);
    }
}

TEST_F(BkSuite, MatchesNaiveOracle) {
  for (const auto& t : suite())
    for (int r = 1; r < t.alphabet(); ++r) ASSERT_EQ(bk(t, r), oracle::naive_bk(t, r));
}

TEST_F(BkSuite, EvacuationWordIsAnInvolution) {
  for (const auto& t : suite()) {
    auto z = z_word(t.alphabet());
    ASSERT_EQ(apply_bk_word(apply_bk_word(t, z), z), t);
  }
}

TEST_F(BkSuite, SwitchingWordsAreMutuallyInverse) {
  for (const auto& t : suite()) {
    int m = t.alphabet();
    for (int r = 1; r < m; ++r)
      ASSERT_EQ(apply_bk_word(apply_bk_word(t, t_word(m - r, r)), t_word(r, m - r)), t);
  }
}

TEST_F(BkSuite, EvacuationFactorsThroughSwitching) {
  for (const auto& t : suite()) {
    int m = t.alphabet();
    for (int l = 1; l < m; ++l) {
      int k = m - l;
      BkWord rhs = z_word(k);
      for (int x : t_word(l, k)) rhs.push_back(x);
      for (int x : z_word(l)) rhs.push_back(x);
      ASSERT_EQ(apply_bk_word(t, z_word(m)), apply_bk_word(t, rhs));
    }
  }
}
