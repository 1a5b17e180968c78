#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "yt/bijections.hpp"
#include "yt/circuits.hpp"
#include "yt/harness.hpp"

using namespace yt;

// Size neutrality: no map inflates its input by more than a constant factor.
class SizeNeutral : public ::testing::TestWithParam<std::string> {};

TEST_P(SizeNeutral, OutputBitsBounded) {
  const MapFn& f = reference_map(GetParam());
  double worst = 0;
  auto inst = harness::instances(GetParam(), {5, 3, 3});
  ASSERT_FALSE(inst.empty());
  for (const auto& x : inst) {
    double in = static_cast<double>(bit_size(x));
    double out = static_cast<double>(bit_size(f(x)));
    if (in > 0) worst = std::max(worst, out / in);
  }
  EXPECT_LT(worst, 4.0);
}

INSTANTIATE_TEST_SUITE_P(AllMaps, SizeNeutral, ::testing::ValuesIn(map_names()));

TEST(Evacuation, WeightOfRandomlySampledPatterns) {
  // Larger shapes than the exhaustive suite, sampled from a fixed seed.
  std::mt19937 rng(7);
  for (int n = 0; n < 200; ++n) {
    int rows = 1 + static_cast<int>(rng() % 5), k = 1 + static_cast<int>(rng() % 6);
    Rows c(rows, std::vector<int64_t>(k, 0));
    // Fill a normal tableau greedily: row i takes letters >= i+1 only.
    for (int i = 0; i < rows && i < k; ++i)
      for (int j = i; j < k; ++j) c[i][j] = rng() % 3;
    Tableau t;
    try {
      t = Tableau::from_recording({}, c);
    } catch (const Error&) {
      continue;
    }
    Tableau x = xi(t);
    ASSERT_EQ(x.weight(), reversed(t.weight()));
    ASSERT_EQ(xi(x), t);
    ASSERT_EQ(chi(t), x);
    ASSERT_EQ(psi(rotate180(t)), x);
  }
}
