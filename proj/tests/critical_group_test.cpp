#include "critgroup/critical_group.hpp"

#include <random>

#include <gtest/gtest.h>

#include "critgroup/error.hpp"
#include "critgroup/families.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace critgroup {
namespace {

using testing_helpers::factors;
using testing_helpers::graph_from;

Multigraph cycle(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph(n, edges);
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

TEST(DivisorTest, Arithmetic) {
  auto a = Divisor::from({1, -2, 1});
  auto b = Divisor::from({0, 1, -1});
  EXPECT_EQ(a + b, Divisor::from({1, -1, 0}));
  EXPECT_EQ(a - b, Divisor::from({1, -3, 2}));
  EXPECT_EQ(Integer(3) * b, Divisor::from({0, 3, -3}));
  EXPECT_EQ(-a, Divisor::from({-1, 2, -1}));
  EXPECT_EQ(a.degree(), 0);
  EXPECT_EQ(Divisor::difference(3, 2, 0), Divisor::from({-1, 0, 1}));
  EXPECT_TRUE(Divisor(4).is_zero());
  EXPECT_THROW(a + Divisor(2), Error);
}

TEST(ApplyFiringTest, Examples) {
  Multigraph p2(2, {{0, 1}});
  auto d = Divisor::from({1, -1});
  EXPECT_EQ(apply_firing(p2, d, FiringScript{testing_helpers::ints({0, 0})}), d);
  EXPECT_EQ(apply_firing(p2, d, FiringScript{testing_helpers::ints({1, 1})}), d);
  EXPECT_TRUE(apply_firing(p2, d, FiringScript{testing_helpers::ints({1, 0})}).is_zero());
  EXPECT_THROW(apply_firing(p2, d, FiringScript{testing_helpers::ints({1})}), Error);
}

TEST(ApplyFiringTest, SubtractsLaplacianColumn) {
  Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {0, 0}});
  auto fired = apply_firing(g, Divisor(3), FiringScript{testing_helpers::ints({0, 1, 0})});
  EXPECT_EQ(fired, Divisor::from({2, -3, 1}));
}

TEST(CriticalGroupTest, TreeIsTrivial) {
  CriticalGroup cg(Multigraph(4, {{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(cg.group().is_trivial());
  EXPECT_TRUE(is_principal(cg, Divisor::from({1, 0, 0, -1})));
}

TEST(CriticalGroupTest, IntroGraph) {
  CriticalGroup cg(intro_counterexample().graph);
  EXPECT_EQ(factors(cg.group()), (std::vector<long long>{2, 2, 4, 12}));
  EXPECT_EQ(cg.group().order(), 192);
}

TEST(CriticalGroupTest, CirculantSeven) {
  auto c7 = circulant(7, {1, 2});
  CriticalGroup cg(c7.graph);
  EXPECT_EQ(cg.group().order(), 1183);
  EXPECT_EQ(factors(cg.group()), (std::vector<long long>{13, 91}));
  EXPECT_EQ(factors(cg.group()), oracle::canonical_chain({13, 13, 7}));
}

TEST(CriticalGroupTest, Disconnected) {
  try {
    CriticalGroup cg(Multigraph(3, {{0, 1}}));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(IsPrincipalTest, Examples) {
  CriticalGroup p2(Multigraph(2, {{0, 1}}));
  EXPECT_TRUE(is_principal(p2, Divisor(2)));
  EXPECT_TRUE(is_principal(p2, Divisor::from({1, -1})));

  CriticalGroup c3(cycle(3));
  EXPECT_EQ(c3.group(), FinAbGroup::cyclic(3));
  const auto d = Divisor::from({1, -1, 0});
  EXPECT_FALSE(is_principal(c3, d));
  EXPECT_FALSE(is_zero(c3.project(d)));
  EXPECT_TRUE(is_principal(c3, Integer(3) * d));
}

TEST(IsPrincipalTest, NonzeroDegreeThrows) {
  CriticalGroup c3(cycle(3));
  try {
    is_principal(c3, Divisor::from({1, 0, 0}));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonzeroDegree);
  }
}

TEST(CriticalGroupTest, ReduceExpandRoundTrip) {
  CriticalGroup cg(cycle(5));
  auto d = Divisor::from({-3, 1, 0, 4, -2});
  EXPECT_EQ(cg.expand(cg.reduce(d)), d);
  for (std::size_t i = 0; i < cg.group().rank(); ++i) {
    auto coords = cg.project(cg.generator(i));
    IntVector unit(cg.group().rank());
    unit[i] = 1;
    EXPECT_EQ(coords, unit);
  }
}

TEST(SubgroupTest, Examples) {
  CriticalGroup cg(intro_counterexample().graph);
  EXPECT_TRUE(subgroup_generated(cg, {}).is_trivial());
  EXPECT_EQ(quotient_by_subgroup(cg, {}), cg.group());

  std::vector<Divisor> all;
  for (VertexId v = 1; v < 5; ++v) all.push_back(Divisor::difference(5, v, 0));
  EXPECT_EQ(subgroup_generated(cg, all), cg.group());
  EXPECT_TRUE(quotient_by_subgroup(cg, all).is_trivial());

  EXPECT_THROW(subgroup_generated(cg, {Divisor::from({1, 0, 0, 0, 0})}), Error);
}

TEST(CriticalGroupProperties, RandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const int m = std::min(10, n + trial % 5);
    auto edges = oracle::random_connected_multigraph(rng, n, m);
    Multigraph g = graph_from(n, edges);
    CriticalGroup cg(g);

    EXPECT_EQ(cg.group().order(), static_cast<long>(oracle::spanning_trees(n, edges)));

    for (int k = 0; k < 10; ++k) {
      Divisor d = random_degree_zero(rng, n, 4);
      FiringScript s{IntVector(n)};
      std::uniform_int_distribution<int> f(-3, 3);
      for (auto& x : s.values) x = f(rng);
      EXPECT_EQ(cg.project(apply_firing(g, d, s)), cg.project(d));
      EXPECT_EQ(is_principal(cg, d), is_zero(cg.project(d)));
      EXPECT_TRUE(is_principal(cg, d - apply_firing(g, d, s)));
    }

    std::vector<Divisor> gens{random_degree_zero(rng, n, 3), random_degree_zero(rng, n, 3)};
    EXPECT_EQ(subgroup_generated(cg, gens).order() * quotient_by_subgroup(cg, gens).order(),
              cg.group().order());
  }
}

}  // namespace
}  // namespace critgroup
