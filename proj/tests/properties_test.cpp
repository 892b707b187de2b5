// Seeded random sweeps over the linear algebra, the critical group and the
// decomposition predicates. Generators are hand-rolled on std::mt19937_64.

#include <random>

#include <gtest/gtest.h>

#include "critgroup/decomposition.hpp"
#include "critgroup/exact_linalg.hpp"
#include "critgroup/families.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace critgroup {
namespace {

using testing_helpers::to_int_matrix;

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

TEST(LinalgProperties, SmithFormInvariants) {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 500; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    auto raw = oracle::random_matrix(rng, rows, cols, -9, 9);
    IntMatrix m = to_int_matrix(raw);
    auto snf = smith_normal_form(m);
    ASSERT_EQ(snf.U * m * snf.V, snf.S) << m;
    ASSERT_TRUE(is_unimodular(snf.U));
    ASSERT_TRUE(is_unimodular(snf.V));
    ASSERT_EQ(snf.U * snf.U_inverse, IntMatrix::identity(rows));
    auto diag = snf.diagonal();
    for (std::size_t i = 0; i < static_cast<std::size_t>(rows); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j)
        if (i != j) ASSERT_EQ(snf.S(i, j), 0);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      ASSERT_GE(diag[i], 0);
      if (diag[i] == 0) ASSERT_EQ(diag[i + 1], 0);
      else ASSERT_EQ(diag[i + 1] % diag[i], 0);
    }
    // Invariant factors are determined by the determinantal divisors.
    auto expected = oracle::determinantal_invariants(raw);
    ASSERT_EQ(diag.size(), expected.size());
    for (std::size_t i = 0; i < diag.size(); ++i) ASSERT_EQ(diag[i], Integer(static_cast<long>(expected[i]))) << m;
    // Idempotence.
    ASSERT_EQ(smith_normal_form(snf.S).S, snf.S);
  }
}

TEST(LinalgProperties, HermiteFormInvariants) {
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 500; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    auto raw = oracle::random_matrix(rng, rows, cols, -6, 6);
    IntMatrix m = to_int_matrix(raw);
    auto hnf = hermite_normal_form(m);
    ASSERT_EQ(m * hnf.T, hnf.H);
    ASSERT_TRUE(is_unimodular(hnf.T));
    ASSERT_EQ(hnf.rank, smith_normal_form(m).rank());
    for (std::size_t c = 0; c < hnf.rank; ++c) {
      const std::size_t p = hnf.pivot_rows[c];
      ASSERT_GT(hnf.H(p, c), 0);
      for (std::size_t r = 0; r < p; ++r) ASSERT_EQ(hnf.H(r, c), 0);
      for (std::size_t left = 0; left < c; ++left) {
        ASSERT_GE(hnf.H(p, left), 0);
        ASSERT_LT(hnf.H(p, left), hnf.H(p, c));
      }
      if (c > 0) ASSERT_GT(p, hnf.pivot_rows[c - 1]);
    }
    for (std::size_t c = hnf.rank; c < static_cast<std::size_t>(cols); ++c)
      ASSERT_TRUE(is_zero(hnf.H.column(c)));
    ASSERT_EQ(hermite_normal_form(hnf.H).H, hnf.H);

    // Membership against a bounded search for small targets.
    std::uniform_int_distribution<int> val(-3, 3);
    std::vector<long long> target(rows);
    IntVector v(rows);
    for (int r = 0; r < rows; ++r) {
      target[r] = val(rng);
      v[r] = static_cast<long>(target[r]);
    }
    if (oracle::bounded_combination(raw, target, 3)) ASSERT_TRUE(lattice_contains(hnf, v));
    if (auto coords = lattice_coordinates(m, v)) ASSERT_EQ(m * *coords, v);
    else ASSERT_FALSE(lattice_contains(hnf, v));
  }
}

TEST(LinalgProperties, DeterminantMatchesSmithProduct) {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    IntMatrix m = to_int_matrix(oracle::random_matrix(rng, n, n, -20, 20));
    Integer product = 1;
    for (const auto& d : smith_normal_form(m).diagonal()) product *= d;
    ASSERT_EQ(abs(determinant(m)), product);
  }
}

Divisor random_degree_zero(std::mt19937_64& rng, std::size_t n, int spread) {
  std::uniform_int_distribution<int> val(-spread, spread);
  Divisor d(n);
  Integer sum = 0;
  for (std::size_t v = 1; v < n; ++v) {
    d[v] = val(rng);
    sum += d[v];
  }
  d[0] = -sum;
  return d;
}

Divisor random_combination(std::mt19937_64& rng, std::size_t n, const std::vector<Divisor>& gens) {
  std::uniform_int_distribution<int> coef(-2, 2);
  Divisor d(n);
  for (const auto& g : gens) d += Integer(coef(rng)) * g;
  return d;
}

std::vector<FamilyInstance> labeled_instances() {
  return {circulant(7, {1, 2}),       circulant(9, {1, 3}),       circulant(5, {1, 2}),
          circulant(14, {2, 5}),      concentric_polygon(3),      concentric_polygon(4),
          concentric_polygon(5),      chained_preset("edge", 4),  chained_preset("path", 3),
          chained_preset("square", 3), testing_helpers::free_cycle_action(3)};
}

TEST(DecompositionProperties, MembershipMatchesLattice) {
  for (const auto& inst : labeled_instances()) {
    DecompositionContext ctx(inst.graph, inst.action);
    const std::size_t n = inst.graph.vertex_count();
    std::vector<Divisor> p12 = p_generators(ctx, 1);
    for (auto& d : p_generators(ctx, 2)) p12.push_back(d);
    const auto p_all = p_generators_all(ctx);
    std::mt19937_64 rng(2024);
    int p12_hits = 0, p_hits = 0;
    for (int trial = 0; trial < 210; ++trial) {
      Divisor d = trial % 3 == 0   ? random_degree_zero(rng, n, 4)
                  : trial % 3 == 1 ? random_combination(rng, n, p12)
                                   : random_combination(rng, n, p_all);
      const bool a12 = in_P12(ctx, d), a = in_P(ctx, d);
      ASSERT_EQ(a12, lattice_in_P12(ctx, d)) << inst.name << " " << to_string(d.values);
      ASSERT_EQ(a, lattice_in_P(ctx, d)) << inst.name << " " << to_string(d.values);
      if (a12) {
        ++p12_hits;
        auto [d1, d2] = split_P12(ctx, d);
        ASSERT_EQ(d1 + d2, d);
        ASSERT_TRUE(is_pullback(ctx.quotient(1), d1));
        ASSERT_TRUE(is_pullback(ctx.quotient(2), d2));
      }
      if (a) {
        ++p_hits;
        auto parts = split_P123(ctx, d);
        ASSERT_EQ(parts[0] + parts[1] + parts[2], d);
        for (int i = 1; i <= 3; ++i) ASSERT_TRUE(is_pullback(ctx.quotient(i), parts[i - 1]));
      }
      ASSERT_EQ(is_principal(ctx.critical_group(), d), is_zero(ctx.critical_group().project(d)));
    }
    EXPECT_GE(p12_hits, 50) << inst.name;
    EXPECT_GE(p_hits, 100) << inst.name;
  }
}

TEST(DecompositionProperties, SeedShiftInvariance) {
  for (const auto& inst : labeled_instances()) {
    DecompositionContext base(inst.graph, inst.action);
    const std::size_t n = inst.graph.vertex_count();
    for (std::size_t shift = 1; shift < inst.action.n; shift += 2) {
      DecompositionContext shifted(inst.graph, inst.action, shift);
      std::mt19937_64 rng(shift);
      for (int trial = 0; trial < 30; ++trial) {
        Divisor d = random_degree_zero(rng, n, 3);
        ASSERT_EQ(in_P12(base, d), in_P12(shifted, d)) << inst.name;
        ASSERT_EQ(in_P(base, d), in_P(shifted, d)) << inst.name;
        for (int i = 1; i <= 3; ++i) ASSERT_EQ(in_P_i(base, d, i), in_P_i(shifted, d, i));
      }
    }
  }
}

TEST(DecompositionProperties, OrderIdentities) {
  auto klein = klein_example();
  auto instances = labeled_instances();
  instances.push_back(klein);
  for (const auto& inst : instances) {
    DecompositionContext ctx(inst.graph, inst.action);
    const Integer product = ctx.quotient_group(1).group().order() *
                            ctx.quotient_group(2).group().order() *
                            ctx.quotient_group(3).group().order();
    const auto j = sum_subgroup(ctx);
    const auto ker = kernel_of_hom(pullback_hom(ctx, {1, 2, 3}));
    const auto coker = quotient_by_subgroup(ctx.critical_group(), j.generators);
    EXPECT_EQ(ker.order() * j.group.order(), product) << inst.name;
    EXPECT_EQ(j.group.order() * coker.order(), ctx.critical_group().group().order()) << inst.name;
    EXPECT_EQ(coker, quotient_by_subgroup(ctx.critical_group(), p_generators_all(ctx)));
  }
}

TEST(DecompositionProperties, PullbackInjectivity) {
  auto instances = labeled_instances();
  instances.push_back(klein_example());
  for (const auto& inst : instances) {
    DecompositionContext ctx(inst.graph, inst.action);
    std::mt19937_64 rng(77);
    std::vector<std::pair<const QuotientResult*, const CriticalGroup*>> targets;
    for (int i = 1; i <= 3; ++i) targets.emplace_back(&ctx.quotient(i), &ctx.quotient_group(i));
    targets.emplace_back(&ctx.ghat(), &ctx.ghat_group());
    for (const auto& [q, qg] : targets) {
      const std::size_t k = q->quotient.vertex_count();
      if (k < 2) continue;
      for (int trial = 0; trial < 50; ++trial) {
        Divisor d = random_degree_zero(rng, k, 3);
        ASSERT_EQ(is_principal(*qg, d), is_principal(ctx.critical_group(), pullback(*q, d)))
            << inst.name;
      }
    }
  }
}

}  // namespace
}  // namespace critgroup
