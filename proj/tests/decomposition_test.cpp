#include "critgroup/decomposition.hpp"

#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "critgroup/error.hpp"
#include "critgroup/families.hpp"
#include "test_helpers.hpp"

namespace critgroup {
namespace {

using testing_helpers::factors;
using testing_helpers::group;

Divisor c7_divisor(std::initializer_list<long> head) {
  Divisor d(7);
  std::size_t i = 0;
  for (long v : head) d[i++] = v;
  return d;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

class CirculantSeven : public ::testing::Test {
 protected:
  FamilyInstance inst = circulant(7, {1, 2});
  DecompositionContext ctx{inst.graph, inst.action};
};

TEST_F(CirculantSeven, ContextShape) {
  EXPECT_EQ(ctx.n(), 7u);
  EXPECT_EQ(ctx.s(), 1u);
  EXPECT_EQ(ctx.t(), 0u);
  ASSERT_TRUE(ctx.has_labeling());
  // z_i = v_i: v1 is fixed by sigma2 and the rotation steps by one.
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(ctx.labeling().z[0][i], i);
  EXPECT_EQ(factors(ctx.quotient_group(1).group()), (std::vector<long long>{13}));
  EXPECT_EQ(factors(ctx.quotient_group(2).group()), (std::vector<long long>{13}));
  EXPECT_TRUE(ctx.quotient_group(3).group().is_trivial());
  EXPECT_EQ(ctx.ghat().quotient.vertex_count(), 1u);
}

TEST_F(CirculantSeven, OrbitSums) {
  auto d = c7_divisor({1, -2, 1});
  auto s = orbit_sums(ctx, d);
  EXPECT_EQ(s.Z, testing_helpers::ints({1, -2, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(s.X.size() == 7 && is_zero(s.X) && is_zero(s.Y));
}

TEST_F(CirculantSeven, MembershipExamples) {
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(in_P_i(ctx, Divisor(7), i));
  EXPECT_FALSE(in_P_i(ctx, c7_divisor({1, -1}), 3));
  EXPECT_FALSE(in_P12(ctx, c7_divisor({1, -1})));
  EXPECT_FALSE(in_P(ctx, c7_divisor({1, -1})));
  EXPECT_TRUE(in_P12(ctx, c7_divisor({1, -2, 1})));
  EXPECT_TRUE(lattice_in_P12(ctx, c7_divisor({1, -2, 1})));
  EXPECT_FALSE(lattice_in_P12(ctx, c7_divisor({1, -1})));
  EXPECT_EQ(code_of([&] { in_P12(ctx, c7_divisor({1})); }), ErrorCode::kNonzeroDegree);
  EXPECT_EQ(code_of([&] { in_P_i(ctx, Divisor(7), 4); }), ErrorCode::kInvalidArgument);
}

TEST_F(CirculantSeven, PullbacksLandInTheirP) {
  std::mt19937_64 rng(3);
  for (int i = 1; i <= 3; ++i) {
    const auto& q = ctx.quotient(i);
    const std::size_t k = q.quotient.vertex_count();
    for (int trial = 0; trial < 10; ++trial) {
      Divisor d(k);
      std::uniform_int_distribution<int> val(-4, 4);
      Integer sum = 0;
      for (std::size_t v = 1; v < k; ++v) {
        d[v] = val(rng);
        sum += d[v];
      }
      d[0] = -sum;
      EXPECT_TRUE(in_P_i(ctx, pullback(q, d), i)) << "P" << i;
    }
  }
}

TEST_F(CirculantSeven, Splits) {
  auto [z1, z2] = split_P12(ctx, Divisor(7));
  EXPECT_TRUE(z1.is_zero());
  EXPECT_TRUE(z2.is_zero());

  auto d = c7_divisor({1, -2, 1});
  auto [d1, d2] = split_P12(ctx, d);
  EXPECT_EQ(d1 + d2, d);
  EXPECT_TRUE(in_P_i(ctx, d1, 1));
  EXPECT_TRUE(in_P_i(ctx, d2, 2));
  EXPECT_EQ(code_of([&] { split_P12(ctx, c7_divisor({1, -1})); }), ErrorCode::kPrecondition);

  auto zero3 = split_P123(ctx, Divisor(7));
  for (const auto& part : zero3) EXPECT_TRUE(part.is_zero());
  auto parts = split_P123(ctx, c7_divisor({2, -1, 0, 0, 0, 0, -1}));
  EXPECT_EQ(parts[0] + parts[1] + parts[2], c7_divisor({2, -1, 0, 0, 0, 0, -1}));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(in_P_i(ctx, parts[i], i + 1));
}

TEST_F(CirculantSeven, Theorems) {
  EXPECT_EQ(dp_quotient(ctx), group({7}));
  EXPECT_TRUE(lprime_quotient(ctx).is_trivial());
  EXPECT_EQ(sum_subgroup(ctx).group.order(), 169);
  for (const auto& check : {verify_dp(ctx), verify_lprime(ctx), verify_P1P2_sequence(ctx),
                            verify_kernel(ctx), verify_quotient(ctx), verify_order_corollary(ctx),
                            verify_tree_theorem(ctx)}) {
    EXPECT_TRUE(check.pass) << check.name << ": " << check.computed;
    EXPECT_FALSE(check.flagged) << check.name;
  }
  EXPECT_EQ(verify_quotient(ctx).computed, "Z/7");
  EXPECT_TRUE(kernel_of_hom(pullback_hom(ctx, {1, 2, 3})).is_trivial());
}

TEST(DecompositionTest, ConcentricFour) {
  auto g4 = concentric_polygon(4);
  DecompositionContext ctx(g4.graph, g4.action);
  EXPECT_EQ(ctx.s(), 1u);
  EXPECT_EQ(ctx.t(), 1u);
  EXPECT_TRUE(ctx.labeling().swapped);
  EXPECT_EQ(factors(ctx.quotient_group(1).group()), (std::vector<long long>{40}));
  EXPECT_EQ(factors(ctx.quotient_group(2).group()), (std::vector<long long>{30}));
  EXPECT_EQ(factors(ctx.quotient_group(3).group()), (std::vector<long long>{5}));
  EXPECT_TRUE(ctx.ghat().quotient.is_tree());

  EXPECT_EQ(dp_quotient(ctx), group({4, 4}));
  EXPECT_EQ(lprime_quotient(ctx), group({4}));
  auto j = sum_subgroup(ctx);
  EXPECT_EQ(j.group.order(), 6000);
  EXPECT_TRUE(is_isomorphic(j.group, group({40, 30, 5})));
  EXPECT_EQ(quotient_by_subgroup(ctx.critical_group(), j.generators), group({4}));
  EXPECT_EQ(image_order(pullback_hom(ctx, {1, 2, 3})), 6000);
  EXPECT_EQ(image_order(pullback_hom(ctx, {1, 2})), 1200);
  EXPECT_TRUE(kernel_of_hom(pullback_hom(ctx, {1, 2, 3})).is_trivial());

  for (const auto& check : {verify_dp(ctx), verify_lprime(ctx), verify_P1P2_sequence(ctx),
                            verify_kernel(ctx), verify_quotient(ctx), verify_order_corollary(ctx)}) {
    EXPECT_TRUE(check.pass) << check.name << ": " << check.computed;
  }
  EXPECT_EQ(code_of([&] { verify_tree_theorem(ctx); }), ErrorCode::kPrecondition);

  auto report = build_report(ctx);
  EXPECT_TRUE(report.all_pass());
  EXPECT_EQ(report.exponent, 240);
  EXPECT_EQ(report.split_exponent, 120);
  EXPECT_TRUE(report.extension_not_split());
}

TEST(DecompositionTest, ConcentricFourSplits) {
  auto g4 = concentric_polygon(4);
  DecompositionContext ctx(g4.graph, g4.action);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> val(-3, 3);
  int hits = 0;
  for (int trial = 0; trial < 400 && hits < 20; ++trial) {
    Divisor d(12);
    Integer sum = 0;
    for (std::size_t v = 1; v < 12; ++v) {
      d[v] = val(rng);
      sum += d[v];
    }
    d[0] = -sum;
    if (!in_P(ctx, d)) continue;
    ++hits;
    auto parts = split_P123(ctx, d);
    EXPECT_EQ(parts[0] + parts[1] + parts[2], d);
    for (int i = 0; i < 3; ++i) {
      EXPECT_TRUE(in_P_i(ctx, parts[i], i + 1));
      EXPECT_TRUE(is_pullback(ctx.quotient(i + 1), parts[i]));
    }
  }
  EXPECT_GE(hits, 5);
}

TEST(DecompositionTest, KleinWithoutLabeling) {
  auto k = klein_example();
  DecompositionContext ctx(k.graph, k.action);
  EXPECT_FALSE(ctx.has_labeling());
  EXPECT_FALSE(ctx.labeling_error().empty());
  EXPECT_EQ(ctx.s(), 3u);
  EXPECT_EQ(ctx.t(), 0u);
  EXPECT_EQ(code_of([&] { in_P(ctx, Divisor(6)); }), ErrorCode::kLabelingImpossible);
  EXPECT_EQ(code_of([&] { split_P12(ctx, Divisor(6)); }), ErrorCode::kLabelingImpossible);

  // Label-free computations still run. Values cross-checked with an
  // independent Smith-form computation over the pulled-back generators.
  EXPECT_EQ(factors(ctx.critical_group().group()), (std::vector<long long>{2, 2, 8}));
  EXPECT_TRUE(ctx.quotient_group(1).group().is_trivial());
  EXPECT_EQ(ctx.quotient_group(2).group(), group({4}));
  EXPECT_EQ(ctx.quotient_group(3).group(), group({2, 2}));
  EXPECT_EQ(sum_subgroup(ctx).group, group({2, 4}));
  EXPECT_EQ(kernel_of_hom(pullback_hom(ctx, {1, 2, 3})), group({2}));
  EXPECT_EQ(quotient_by_subgroup(ctx.critical_group(), p_generators_all(ctx)), group({2, 2}));
  EXPECT_EQ(dp_quotient(ctx), group({2, 2}));
  EXPECT_TRUE(lprime_quotient(ctx).is_trivial());
  EXPECT_TRUE(verify_P1P2_sequence(ctx).pass);
  EXPECT_TRUE(verify_order_corollary(ctx).pass);
  // The closed forms assume a labeling; here they predict (Z/2)^2 and (Z/2)^3.
  EXPECT_FALSE(verify_kernel(ctx).pass);
  EXPECT_FALSE(verify_quotient(ctx).pass);
}

TEST(DecompositionTest, IntroRejected) {
  auto intro = intro_counterexample();
  EXPECT_EQ(code_of([&] { DecompositionContext ctx(intro.graph, intro.action); }),
            ErrorCode::kOrbitSize);
  auto cert = embedding_certificate(intro.graph, intro.action);
  EXPECT_EQ(cert.jac.order(), 192);
  EXPECT_EQ(cert.direct_sum_order, 576);
  EXPECT_FALSE(cert.order_divides);
  EXPECT_EQ(cert.jac_quotients[0], group({12}));
  EXPECT_EQ(cert.jac_quotients[1], group({12}));
  EXPECT_EQ(cert.jac_quotients[2], group({2, 2}));
}

TEST(DecompositionTest, FreeActionEvenN) {
  for (std::size_t n : {2u, 4u}) {
    auto inst = testing_helpers::free_cycle_action(n);
    DecompositionContext ctx(inst.graph, inst.action);
    EXPECT_EQ(ctx.s(), 0u);
    EXPECT_EQ(ctx.t(), 1u);
    EXPECT_EQ(dp_quotient(ctx), direct_power(FinAbGroup::cyclic(n), 2));
    EXPECT_TRUE(verify_dp(ctx).pass);
    EXPECT_TRUE(verify_kernel(ctx).pass);
    EXPECT_TRUE(verify_quotient(ctx).pass);
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
      Divisor d(2 * n);
      Integer sum = 0;
      for (std::size_t v = 1; v < 2 * n; ++v) {
        d[v] = val(rng);
        sum += d[v];
      }
      d[0] = -sum;
      ASSERT_EQ(in_P(ctx, d), lattice_in_P(ctx, d));
      if (in_P(ctx, d)) {
        auto parts = split_P123(ctx, d);
        ASSERT_EQ(parts[0] + parts[1] + parts[2], d);
      }
    }
  }
}

TEST(DecompositionTest, EvenPathChainHasNoLabeling) {
  // The glued vertices and the path midpoints are both size-n orbits, fixed
  // by reflections from different classes.
  auto inst = chained_preset("path", 4);
  DecompositionContext ctx(inst.graph, inst.action);
  EXPECT_FALSE(ctx.has_labeling());
  EXPECT_EQ(ctx.s(), 2u);
  EXPECT_TRUE(chained_preset("path", 5).graph.is_connected());
  DecompositionContext odd(chained_preset("path", 5).graph, chained_preset("path", 5).action);
  EXPECT_TRUE(odd.has_labeling());
}

TEST(DecompositionTest, ChainedSquareOrderCorollaryFlagged) {
  auto inst = chained_preset("square", 3);
  DecompositionContext ctx(inst.graph, inst.action);
  auto c = verify_order_corollary(ctx);
  EXPECT_TRUE(c.pass);
  EXPECT_TRUE(c.flagged);
  EXPECT_FALSE(ctx.ghat_group().group().is_trivial());
}

TEST(DecompositionTest, TreeTheoremOnCirculantNine) {
  auto inst = circulant(9, {1, 3});
  DecompositionContext ctx(inst.graph, inst.action);
  auto c = verify_tree_theorem(ctx);
  EXPECT_TRUE(c.pass) << c.computed;
}

}  // namespace
}  // namespace critgroup
