#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "yt/bijections.hpp"
#include "yt/circuits.hpp"
#include "yt/harness.hpp"

using namespace yt;
using yt::test::a0;
using yt::test::error_of;
using yt::test::T;

namespace {
IntMatrix M(const std::vector<std::vector<int64_t>>& r) { return IntMatrix::from_rows(r); }
}  // namespace

TEST(Evaluate, IdentityStepCostsNothing) {
  Value x = a0();
  auto ev = evaluate(*identity(), reference_map("psi"), x);
  EXPECT_EQ(ev.output, x);
  EXPECT_EQ(ev.report.base_calls, 0);
  EXPECT_EQ(cost(*identity()), 0);
}

TEST(Evaluate, PhiViaPsiOnTheIdentity) {
  auto ev = evaluate(*lookup("phi_via_psi").circuit, reference_map("psi"), Value(M({{1, 0}, {0, 1}})));
  EXPECT_EQ(ev.output, make_pair(T({2}, {{1, 2}}), T({2}, {{1, 2}})));
  EXPECT_EQ(ev.report.base_calls, 2);
  EXPECT_GT(ev.report.input_bits, 0);
  EXPECT_GT(ev.report.output_bits, 0);
}

TEST(Evaluate, ChiViaEvacuation) {
  auto closed = evaluate(*lookup("chi_via_xiN").circuit, reference_map("xiN"), Value(a0()));
  EXPECT_EQ(closed.output, Value(chi(a0())));
  EXPECT_EQ(closed.report.base_calls, 3);
  auto plain = evaluate(*lookup("chi_via_xiN_plain").circuit, reference_map("xiN"), Value(a0()));
  EXPECT_EQ(plain.output, Value(chi(a0())));
  EXPECT_EQ(plain.report.base_calls, 4);
}

TEST(Evaluate, ErrorsCarryTheCircuitPath) {
  Value bad = make_pair(Tableau::canonical({2}), a0());
  try {
    evaluate(*lookup("zeta_via_xi").circuit, reference_map("xi"), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    EXPECT_NE(e.detail().find("[at "), std::string::npos) << e.detail();
  }
}

TEST(Circuit, StaticCostRules) {
  auto b = base_call();
  auto t = trivial("t", [](const Value& v) { return v; }, [](const Value& v) { return v; });
  EXPECT_EQ(cost(*b), 1);
  EXPECT_EQ(cost(*t), 1);
  EXPECT_EQ(cost(*seq(b, t)), 2);
  EXPECT_EQ(cost(*seq({b, b, identity(), b})), 3);
  auto p = par(
      "p", [](const Value& v) { return make_pair(v, v); }, b, seq(b, b), [](const Value& v) { return v[0]; });
  EXPECT_EQ(cost(*p), 3);
  auto ev = evaluate(*p, reference_map("xiN"), Value(Tableau::canonical({2, 1})));
  EXPECT_EQ(ev.report.base_calls, 3);
  EXPECT_EQ(ev.output, Value(xi(Tableau::canonical({2, 1}))));
}

TEST(Registry, DeclaredCosts) {
  const std::vector<std::pair<std::string, int64_t>> expected = {
      {"phi_via_psi", 2},       {"psi_via_phiLR", 1},    {"phiLR_via_zetaN", 2}, {"zeta_via_xi", 3},
      {"zetaN_via_xiN", 3},     {"xiN_via_phi", 1},      {"rho1_via_zetaN", 1},  {"zetaN_via_zeta", 1},
      {"zeta_via_zetaLR", 1},   {"zetaLR_via_rho1", 3},  {"zeta_via_zetaN", 2},  {"rho2_via_xiN", 1},
      {"xiN_via_rho2", 1},      {"xiN_via_chi", 1},      {"chi_via_xiN", 3},     {"chi_via_xiN_plain", 4},
      {"varsigma_via_zeta", 3}, {"phi_via_burge", 2},    {"burge_via_phi", 2},   {"theta_via_phi", 1},
  };
  EXPECT_GE(registry().size(), 18u);
  EXPECT_EQ(registry().size(), expected.size());
  for (const auto& [name, c] : expected) {
    const Reduction& r = lookup(name);
    EXPECT_EQ(r.declared_cost, c) << name;
    EXPECT_EQ(cost(*r.circuit), c) << name;
  }
  EXPECT_EQ(lookup("zeta_via_xi").declared_cost, 3);
}

TEST(Registry, UnknownNameIsRejected) { EXPECT_THROW(lookup("nope"), Error); }

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_reduction(lookup("rho1_via_zetaN"), Value(a0())));
  EXPECT_TRUE(verify_reduction(lookup("zeta_via_xi"),
                               make_pair(Tableau::canonical({1}), T({2, 1}, {1}, {{1}, {1}}))));
  Tableau b = T({2, 1}, {1}, {{1}, {2}});
  Tableau a = T({3, 2}, {2, 1}, {{1}, {1}});
  EXPECT_TRUE(verify_reduction(lookup("zetaLR_via_rho1"), make_pair(b, a)));
}

TEST(Verify, ZetaLrViaRho1KeepsAlphabets) {
  Tableau b = T({2, 1}, {1}, {{1}, {2}}).with_alphabet(5);
  Tableau a = T({3, 2}, {2, 1}, {{1}, {1}}).with_alphabet(4);
  auto ev = evaluate(*lookup("zetaLR_via_rho1").circuit, reference_map("rho1"), make_pair(b, a));
  auto ref = zeta_lr(b, a);
  EXPECT_EQ(ev.output[0].tableau().alphabet(), ref.first.alphabet());
  EXPECT_EQ(ev.output[1].tableau().alphabet(), ref.second.alphabet());
}

// Every registered circuit reproduces its source map on the whole suite, with
// as many base calls as it declares.
class ReductionSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(ReductionSuite, ReproducesSourceMap) {
  const Reduction& r = lookup(GetParam());
  const oracle::Bounds bounds{5, 3, 3};
  auto inst = harness::instances_for(r, bounds);
  ASSERT_FALSE(inst.empty());
  const MapFn& base = reference_map(r.base);
  const MapFn& source = reference_map(r.source);
  for (const auto& x : inst) {
    auto ev = evaluate(*r.circuit, base, x);
    ASSERT_EQ(ev.output, source(x)) << describe(x);
    ASSERT_EQ(ev.report.base_calls, r.declared_cost) << describe(x);
  }
}

INSTANTIATE_TEST_SUITE_P(All, ReductionSuite, ::testing::ValuesIn([] {
                           std::vector<std::string> names;
                           for (const auto& r : registry()) names.push_back(r.name);
                           return names;
                         }()));

TEST(Compose, CostsMultiply) {
  Reduction r = compose_reductions(lookup("phiLR_via_zetaN"), lookup("zetaN_via_xiN"));
  EXPECT_EQ(r.source, "phiLR");
  EXPECT_EQ(r.base, "xiN");
  EXPECT_EQ(cost(*r.circuit), 6);
  for (const auto& x : harness::instances("phiLR", {4, 3, 3})) {
    auto ev = evaluate(*r.circuit, reference_map("xiN"), x);
    ASSERT_EQ(ev.output, reference_map("phiLR")(x));
    ASSERT_EQ(ev.report.base_calls, 6);
  }
}

TEST(Compose, WithCostOneKeepsCost) {
  Reduction r = compose_reductions(lookup("zeta_via_xi"), reduce_via("xi", "xi"));
  EXPECT_EQ(cost(*r.circuit), 3);
}

TEST(Compose, MismatchIsRejected) {
  EXPECT_EQ(error_of([] { compose_reductions(lookup("phi_via_psi"), lookup("zeta_via_xi")); }), ErrorKind::MapMismatch);
}

TEST(Graph, MinCosts) {
  auto g = build_graph(registry());
  EXPECT_EQ(min_cost(g, "rho1", "zetaN"), 1);
  EXPECT_EQ(min_cost(g, "chi", "rho1"), 36);
  int64_t worst = 0;
  for (const auto& a : theorem_maps())
    for (const auto& b : theorem_maps())
      if (a != b) worst = std::max(worst, min_cost(g, a, b));
  EXPECT_EQ(worst, 36);
}

TEST(Graph, UnreachableIsAnError) {
  auto g = build_graph(registry());
  EXPECT_EQ(error_of([&] { min_cost(g, "xi", "theta"); }), ErrorKind::Unreachable);
}

TEST(Graph, ComposedChiFromRho1) {
  Reduction r = reduce_via("chi", "rho1");
  EXPECT_EQ(cost(*r.circuit), 36);
  for (const auto& x : harness::instances("chi", {4, 2, 3})) {
    auto ev = evaluate(*r.circuit, reference_map("rho1"), x);
    ASSERT_EQ(ev.output, reference_map("chi")(x)) << describe(x);
    ASSERT_EQ(ev.report.base_calls, 36);
  }
}

TEST(Graph, DotExport) {
  std::string dot = to_dot(registry());
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("\"chi\" -> \"xiN\" [label=\"3\""), std::string::npos);
}

TEST(BitSize, Formula) {
  // One entry of value 0 is one bit; GT pattern of [[1]] is 1 x 2 -> (0, 1).
  EXPECT_EQ(bit_size(Value(T({1}, {{1}}))), 2 * (1 + 0));
  EXPECT_EQ(bit_size(Value(Ints{0})), 1);
  EXPECT_EQ(bit_size(Value(Ints{5, 1})), 2 * (1 + 3));
  EXPECT_EQ(bit_size(make_pair(Value(Ints{5}), Value(Ints{1}))), 2 * (1 + 3));
}
