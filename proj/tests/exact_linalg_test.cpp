#include "critgroup/exact_linalg.hpp"

#include <random>

#include <gtest/gtest.h>

#include "critgroup/error.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace critgroup {
namespace {

using testing_helpers::ints;
using testing_helpers::to_int_matrix;

IntVector invariant_factors(const IntMatrix& m) {
  auto d = smith_normal_form(m).diagonal();
  for (auto& x : d) x = abs(x);
  return d;
}

void expect_valid_snf(const IntMatrix& m, const SnfResult& r) {
  EXPECT_EQ(r.U * m * r.V, r.S);
  EXPECT_EQ(Integer(abs(determinant(r.U))), 1);
  EXPECT_EQ(Integer(abs(determinant(r.V))), 1);
  EXPECT_EQ(r.U * r.U_inverse, IntMatrix::identity(m.rows()));
  for (std::size_t i = 0; i < r.S.rows(); ++i)
    for (std::size_t j = 0; j < r.S.cols(); ++j)
      if (i != j) EXPECT_EQ(r.S(i, j), 0);
  const IntVector d = r.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (d[i] == 0) {
      EXPECT_EQ(d[i + 1], 0) << "zeros must trail";
    } else {
      EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    }
  }
}

void expect_valid_hnf(const IntMatrix& m, const HnfResult& h) {
  EXPECT_EQ(m * h.T, h.H);
  EXPECT_EQ(Integer(abs(determinant(h.T))), 1);
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t r = h.pivot_rows[k];
    EXPECT_GT(h.H(r, k), 0);
    for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(h.H(i, k), 0);
    for (std::size_t j = 0; j < k; ++j) {
      EXPECT_GE(h.H(r, j), 0);
      EXPECT_LT(h.H(r, j), h.H(r, k));
    }
    if (k > 0) EXPECT_GT(r, h.pivot_rows[k - 1]);
  }
  for (std::size_t k = h.rank; k < h.H.cols(); ++k)
    for (std::size_t i = 0; i < h.H.rows(); ++i) EXPECT_EQ(h.H(i, k), 0);
}

TEST(SmithNormalFormTest, AlreadyDiagonal) {
  IntMatrix m{{2, 0}, {0, 6}};
  auto r = smith_normal_form(m);
  expect_valid_snf(m, r);
  EXPECT_EQ(invariant_factors(m), ints({2, 6}));
}

TEST(SmithNormalFormTest, TwoByTwo) {
  IntMatrix m{{2, 4}, {6, 8}};
  expect_valid_snf(m, smith_normal_form(m));
  EXPECT_EQ(invariant_factors(m), ints({2, 4}));
}

TEST(SmithNormalFormTest, NonDividingDiagonalIsFixedUp) {
  IntMatrix m{{2, 0}, {0, 3}};
  EXPECT_EQ(invariant_factors(m), ints({1, 6}));
}

TEST(SmithNormalFormTest, RankDeficientAndRectangular) {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  auto r = smith_normal_form(m);
  expect_valid_snf(m, r);
  EXPECT_EQ(r.rank(), 1u);
  EXPECT_EQ(invariant_factors(m), ints({1, 0}));
  IntMatrix z(3, 2);
  EXPECT_EQ(smith_normal_form(z).rank(), 0u);
}

TEST(SmithNormalFormTest, EmptyMatrix) {
  IntMatrix m(0, 3);
  auto r = smith_normal_form(m);
  EXPECT_TRUE(r.diagonal().empty());
  EXPECT_EQ(r.V.rows(), 3u);
}

TEST(SmithNormalFormTest, AgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    auto m = oracle::random_matrix(rng, rows, cols, -6, 6);
    const auto expected = oracle::determinantal_invariants(m);
    const IntVector got = invariant_factors(to_int_matrix(m));
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], static_cast<long>(expected[i]));
  }
}

TEST(HermiteNormalFormTest, Identity) {
  auto h = hermite_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(h.H, IntMatrix::identity(3));
  EXPECT_EQ(h.rank, 3u);
}

TEST(HermiteNormalFormTest, DiagonalTwo) {
  IntMatrix m{{2, 0}, {0, 2}};
  EXPECT_EQ(hermite_normal_form(m).H, m);
}

TEST(HermiteNormalFormTest, EqualLatticesGiveEqualForms) {
  IntMatrix a{{1, 1}, {0, 2}};
  IntMatrix b{{1, 0}, {0, 2}};
  // Same lattice: (1,0) and (0,2) generate (1,2), and (1,2) - (1,0) = (0,2).
  EXPECT_TRUE(lattice_contains(a, b.column(0)));
  EXPECT_TRUE(lattice_contains(a, b.column(1)));
  EXPECT_TRUE(lattice_contains(b, a.column(1)));
  auto ha = hermite_normal_form(a), hb = hermite_normal_form(b);
  expect_valid_hnf(a, ha);
  expect_valid_hnf(b, hb);
  EXPECT_EQ(ha.H, hb.H);
}

TEST(HermiteNormalFormTest, RankDeficient) {
  IntMatrix m{{2, 4, 6}, {1, 2, 3}};
  auto h = hermite_normal_form(m);
  expect_valid_hnf(m, h);
  EXPECT_EQ(h.rank, 1u);
  EXPECT_EQ(h.basis().cols(), 1u);
}

TEST(LatticeContainsTest, Basics) {
  IntMatrix m{{2, 0}, {0, 2}};
  EXPECT_TRUE(lattice_contains(m, ints({0, 0})));
  EXPECT_TRUE(lattice_contains(m, m.column(1)));
  EXPECT_FALSE(lattice_contains(m, ints({1, 1})));
  EXPECT_TRUE(lattice_contains(m, ints({4, -6})));
}

TEST(LatticeContainsTest, DimensionMismatchThrows) {
  IntMatrix m{{2, 0}, {0, 2}};
  try {
    lattice_contains(m, ints({1, 2, 3}));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(LatticeContainsTest, CoordinatesReproduceVector) {
  IntMatrix m{{3, 1}, {1, 2}, {0, 5}};
  IntVector v = m * ints({4, -7});
  auto x = lattice_coordinates(m, v);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m * *x, v);
  EXPECT_FALSE(lattice_coordinates(m, ints({1, 0, 0})).has_value());
}

TEST(IntegerKernelTest, Examples) {
  EXPECT_EQ(integer_kernel(IntMatrix{{1, 1}}).cols(), 1u);
  auto k = integer_kernel(IntMatrix{{1, 1}});
  EXPECT_EQ(abs(k(0, 0)), 1);
  EXPECT_EQ(k(0, 0) + k(1, 0), 0);

  EXPECT_EQ(integer_kernel(IntMatrix{{2, 1}, {1, 1}}).cols(), 0u);

  auto k2 = integer_kernel(IntMatrix{{2, 4}});
  ASSERT_EQ(k2.cols(), 1u);
  // (2, -1) up to sign
  EXPECT_EQ(abs(k2(0, 0)), 2);
  EXPECT_EQ(abs(k2(1, 0)), 1);
  EXPECT_EQ(2 * k2(0, 0) + 4 * k2(1, 0), 0);
}

TEST(IntegerKernelTest, KernelIsSaturated) {
  // {x : 6x + 10y + 15z = 0} has rank 2; every integer solution must be a combination.
  IntMatrix m{{6, 10, 15}};
  auto k = integer_kernel(m);
  ASSERT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_TRUE(lattice_contains(k, ints({5, -3, 0})));
  EXPECT_TRUE(lattice_contains(k, ints({0, 3, -2})));
  EXPECT_TRUE(lattice_contains(k, ints({5, 0, -2})));
}

}  // namespace
}  // namespace critgroup
