#include "gkz/intlin.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gkz;

namespace {

IntegerVector ints(std::initializer_list<long> v) {
  IntegerVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool in_kernel(const IntegerMatrix& a, const IntegerVector& v) {
  for (const auto& x : multiply(a, v))
    if (x != 0) return false;
  return true;
}

// v up to sign
bool equal_up_to_sign(const IntegerVector& v, const IntegerVector& w) {
  if (v == w) return true;
  IntegerVector neg = w;
  for (auto& x : neg) x = -x;
  return v == neg;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntegerMatrix{{1, 1, 1}, {0, 1, 2}}), 2u);
  EXPECT_EQ(rank(IntegerMatrix(2, 3)), 0u);
  EXPECT_EQ(rank(IntegerMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}), 2u);
  EXPECT_EQ(rank(IntegerMatrix{{2, 4}, {1, 2}}), 1u);
}

TEST(Rank, MatchesGaussianOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng() % 4, n = 1 + rng() % 6;
    const IntegerMatrix a = oracle::random_matrix(rng, d, n, -3, 3);
    EXPECT_EQ(rank(a), oracle::rank(a)) << to_string(a);
  }
}

TEST(KernelLattice, Examples) {
  EXPECT_TRUE(kernel_lattice_basis(IntegerMatrix{{1, 0}, {0, 1}}).empty());

  const auto conic = kernel_lattice_basis(IntegerMatrix{{1, 1, 1}, {0, 1, 2}});
  ASSERT_EQ(conic.size(), 1u);
  EXPECT_TRUE(equal_up_to_sign(conic[0], ints({1, -2, 1})));

  const auto one_two = kernel_lattice_basis(IntegerMatrix{{1, 2}});
  ASSERT_EQ(one_two.size(), 1u);
  EXPECT_TRUE(equal_up_to_sign(one_two[0], ints({2, -1})));
}

TEST(KernelLattice, SizeAndMembershipOnRandomMatrices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng() % 3, n = 1 + rng() % 6;
    const IntegerMatrix a = oracle::random_matrix(rng, d, n, -4, 4);
    const auto basis = kernel_lattice_basis(a);
    EXPECT_EQ(basis.size(), n - oracle::rank(a));
    for (const auto& v : basis) EXPECT_TRUE(in_kernel(a, v)) << to_string(a);
  }
}

TEST(KernelLattice, SpansEveryIntegerKernelVector) {
  // Integer kernel vectors from the rational oracle, scaled to be integral
  // and then divided by their gcd: the basis must express them integrally.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 3, n = 2 + rng() % 4;
    const IntegerMatrix a = oracle::random_matrix(rng, d, n, -4, 4);
    const auto basis = kernel_lattice_basis(a);
    const auto rational = oracle::kernel(oracle::rows_of(a), n);
    if (rational.empty()) continue;

    for (int k = 0; k < 5; ++k) {
      RationalVector v(n);
      for (const auto& b : rational) {
        const long c = static_cast<long>(rng() % 7) - 3;
        for (std::size_t j = 0; j < n; ++j) v[j] += c * b[j];
      }
      IntegerVector u = clear_denominators(v);
      ASSERT_TRUE(in_kernel(a, u));

      // Solve basis-matrix * coeffs = u over Q and demand integral coeffs.
      RationalMatrix b(n, basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t j = 0; j < n; ++j) b(j, c) = basis[c][j];
      RationalVector target(u.begin(), u.end());
      const auto coeffs = solve_rational(b, target);
      ASSERT_TRUE(coeffs.has_value()) << to_string(a);
      for (const auto& x : *coeffs) EXPECT_EQ(x.get_den(), 1) << to_string(a);
    }
  }
}

TEST(SmithForm, DiagonalizesWithUnimodularTransforms) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 3, n = 1 + rng() % 5;
    const IntegerMatrix a = oracle::random_matrix(rng, d, n, -5, 5);
    const SmithForm s = smith_normal_form(a);
    ASSERT_EQ(s.diagonal.size(), oracle::rank(a));
    for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
      EXPECT_GT(s.diagonal[k], 0);
      EXPECT_TRUE(mpz_divisible_p(s.diagonal[k + 1].get_mpz_t(), s.diagonal[k].get_mpz_t()));
    }
    // P·A·Q is diagonal with the invariant factors.
    IntegerMatrix pa(d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < d; ++k) pa(i, j) += s.left(i, k) * a(k, j);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer v = 0;
        for (std::size_t k = 0; k < n; ++k) v += pa(i, k) * s.right(k, j);
        const Integer expected = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Integer(0);
        EXPECT_EQ(v, expected) << to_string(a);
      }
    EXPECT_EQ(oracle::rank(oracle::rows_of(s.left)), d);
    EXPECT_EQ(oracle::rank(oracle::rows_of(s.right)), n);
  }
}

TEST(RowspanContainsOnes, Examples) {
  EXPECT_TRUE(rowspan_contains_ones(IntegerMatrix{{1, 1, 1}, {0, 1, 2}}));
  EXPECT_FALSE(rowspan_contains_ones(IntegerMatrix{{1, 2}}));
  EXPECT_TRUE(rowspan_contains_ones(IntegerMatrix{{2, 2}, {0, 1}}));
}

TEST(ColumnSubmatrix, Examples) {
  const IntegerMatrix a{{1, 1, 1}, {0, 1, 2}};
  const std::vector<std::size_t> first_last{0, 2};
  EXPECT_EQ(column_submatrix(a, first_last), (IntegerMatrix{{1, 1}, {0, 2}}));

  const IntegerMatrix empty = column_submatrix(a, std::vector<std::size_t>{});
  EXPECT_EQ(empty.rows(), 2u);
  EXPECT_EQ(empty.cols(), 0u);

  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(column_submatrix(a, all), a);

  const std::vector<std::size_t> bad{3};
  EXPECT_THROW(column_submatrix(a, bad), std::out_of_range);
}

TEST(ColumnSubmatrix, RankNeverExceedsFullRank) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 3, n = 1 + rng() % 5;
    const IntegerMatrix a = oracle::random_matrix(rng, d, n, -2, 2);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) s.push_back(j);
      EXPECT_LE(rank(column_submatrix(a, s)), rank(a));
    }
  }
}

TEST(SolveRational, ConsistentAndInconsistent) {
  const RationalMatrix a = to_rational(IntegerMatrix{{1, 2}, {2, 4}});
  const RationalVector good{Rational(3), Rational(6)};
  const auto x = solve_rational(a, good);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(multiply(a, *x), good);
  const RationalVector bad{Rational(1), Rational(1)};
  EXPECT_FALSE(solve_rational(a, bad).has_value());
}

TEST(RationalKernel, MatchesOracleDimension) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 4, n = 1 + rng() % 5;
    const IntegerMatrix a = oracle::random_matrix(rng, d, n, -3, 3);
    const auto ker = rational_kernel(to_rational(a));
    EXPECT_EQ(ker.size(), oracle::kernel(oracle::rows_of(a), n).size());
    for (const auto& v : ker)
      for (const auto& x : multiply(to_rational(a), v)) EXPECT_EQ(x, 0);
  }
}

TEST(Vectors, PrimitiveAndClearDenominators) {
  EXPECT_EQ(primitive(ints({4, -6, 8})), ints({2, -3, 4}));
  EXPECT_EQ(primitive(ints({0, 0})), ints({0, 0}));
  const RationalVector v{Rational(1, 2), Rational(-1, 3)};
  EXPECT_EQ(clear_denominators(v), ints({3, -2}));
}

TEST(Matrix, RejectsRaggedRows) {
  const std::vector<std::vector<Integer>> rows{{1, 2}, {3}};
  EXPECT_THROW((void)IntegerMatrix(rows), std::invalid_argument);
  EXPECT_EQ(to_string(IntegerMatrix{{1, 1}, {0, 1}}), "[[1,1],[0,1]]");
}
