#include <gtest/gtest.h>

#include <random>

#include "reid/integer_matrix.hpp"

using namespace reid;

namespace {

// Laplace expansion along the first row.
BigInt laplace(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    BigInt term = m[0][c] * laplace(minor);
    total += c % 2 ? BigInt(-term) : term;
  }
  return total;
}

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// k-th determinantal divisor: gcd of all k x k minors.
BigInt determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  BigInt g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<BigInt>> minor;
      for (auto i : r) {
        std::vector<BigInt> row;
        for (auto j : c) row.push_back(m(i, j));
        minor.push_back(row);
      }
      g = gcd(g, laplace(minor));
    }
  return g;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

}  // namespace

TEST(SmithNormalForm, KnownValues) {
  auto id = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(id.D, IntMatrix::identity(3));

  IntMatrix m{{2, 4}, {6, 8}};
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal(), (std::vector<BigInt>{2, 4}));
  // Oracle: d1 = gcd of entries, d1 d2 = |det|.
  EXPECT_EQ(s.diagonal()[0], determinantal_divisor(m, 1));
  EXPECT_EQ(s.diagonal()[0] * s.diagonal()[1], abs(laplace({{2, 4}, {6, 8}})));

  auto z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.D, IntMatrix(2, 3));
}

TEST(SmithNormalForm, RandomRoundTrip) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, r, c, 20);
    if (trial % 7 == 0)  // force rank deficiency
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3;
    auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.D) << m.to_string();
    ASSERT_EQ(s.U * s.U_inv, IntMatrix::identity(r));
    ASSERT_EQ(abs(determinant(s.U)), 1);
    ASSERT_EQ(abs(determinant(s.V)), 1);
    auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i < s.rank) ASSERT_GT(d[i], 0);
      else ASSERT_EQ(d[i], 0);
      if (i + 1 < s.rank) ASSERT_EQ(d[i + 1] % d[i], 0);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(s.D(i, j), 0);
  }
}

TEST(SmithNormalForm, MatchesDeterminantalDivisors) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, 9);
    auto d = smith_normal_form(m).diagonal();
    BigInt product = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      product *= d[k - 1];
      ASSERT_EQ(product, determinantal_divisor(m, k)) << m.to_string();
    }
  }
}

TEST(Determinant, MatchesLaplace) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, n, n, 10);
    std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    ASSERT_EQ(determinant(m), laplace(rows));
  }
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(SolveInteger, FindsPreimagesExactly) {
  IntMatrix l{{2, 0}, {0, 3}};
  auto s = smith_normal_form(l);
  auto x = solve_integer(s, {4, 9});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(l * *x, (IntVector{4, 9}));
  EXPECT_FALSE(solve_integer(s, {1, 0}).has_value());
}

TEST(Valuation, Basic) {
  EXPECT_EQ(valuation(BigInt(48), 2), 4u);
  EXPECT_EQ(valuation(BigInt(-81), 3), 4u);
  EXPECT_EQ(valuation(BigInt(7), 5), 0u);
}
