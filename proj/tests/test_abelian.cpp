#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "reid/abelian.hpp"
#include "test_support.hpp"

using namespace reid;

namespace {

LatticeAbelianEndo endo(std::size_t k, IntMatrix relations, IntMatrix m) {
  return LatticeAbelianEndo(LatticeAbelianGroup(k, std::move(relations)), std::move(m));
}

/// Elements of Z/n1 x ... x Z/nk as mixed-radix tuples.
struct Direct {
  std::vector<long long> n;
  std::size_t size() const { return std::accumulate(n.begin(), n.end(), std::size_t{1}, std::multiplies<>()); }
  std::vector<long long> decode(std::size_t i) const {
    std::vector<long long> x(n.size());
    for (std::size_t j = 0; j < n.size(); ++j) {
      x[j] = static_cast<long long>(i % static_cast<std::size_t>(n[j]));
      i /= static_cast<std::size_t>(n[j]);
    }
    return x;
  }
  std::size_t encode(const std::vector<long long>& x) const {
    std::size_t i = 0;
    for (std::size_t j = n.size(); j-- > 0;) i = i * static_cast<std::size_t>(n[j]) + static_cast<std::size_t>(((x[j] % n[j]) + n[j]) % n[j]);
    return i;
  }
};

/// Twisted orbit count and fixed count of x -> Mx on a product of cyclic groups, straight from the definition.
std::pair<std::size_t, std::size_t> brute_force(const Direct& a, const std::vector<std::vector<long long>>& m) {
  const std::size_t n = a.size();
  auto apply = [&](const std::vector<long long>& x) {
    std::vector<long long> y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
  };
  // Classes are cosets of Im(1 - M): collect the image, then count cosets.
  std::set<std::size_t> image;
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = a.decode(i);
    auto mx = apply(x);
    std::vector<long long> d(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) d[j] = x[j] - mx[j];
    image.insert(a.encode(d));
    if (a.encode(mx) == i) ++fixed;
  }
  return {n / image.size(), fixed};
}

}  // namespace

TEST(ReidemeisterAbelian, KnownValues) {
  auto quarter = endo(2, IntMatrix(2, 0), IntMatrix{{0, -1}, {1, 0}});
  EXPECT_EQ(reidemeister_abelian(quarter), Count(BigInt(2)));
  EXPECT_EQ(reidemeister_abelian(endo(1, IntMatrix(1, 0), IntMatrix{{1}})), Count::infinite());
  auto neg6 = endo(1, IntMatrix{{6}}, IntMatrix{{5}});
  EXPECT_EQ(reidemeister_abelian(neg6), Count(BigInt(2)));
  EXPECT_EQ(Count::infinite().to_string(), "INFINITE");
}

TEST(FixedAbelian, KnownValues) {
  auto quarter = endo(2, IntMatrix(2, 0), IntMatrix{{0, -1}, {1, 0}});
  EXPECT_TRUE(fixed_abelian(quarter).is_trivial());
  auto id = endo(2, IntMatrix{{4}, {0}}, IntMatrix::identity(2));
  EXPECT_EQ(fixed_abelian(id), id.group().shape());
  auto neg6 = endo(1, IntMatrix{{6}}, IntMatrix{{5}});
  EXPECT_EQ(fixed_abelian(neg6).invariant_factors, (std::vector<BigInt>{2}));
}

TEST(LatticeAbelianEndo, Validation) {
  // Z/4 with x -> 2x is an endomorphism; Z/4 + Z/2 with a swap is not.
  EXPECT_NO_THROW(endo(1, IntMatrix{{4}}, IntMatrix{{2}}));
  EXPECT_REID_ERROR(endo(2, IntMatrix{{4, 0}, {0, 2}}, IntMatrix{{0, 1}, {1, 0}}), ErrorKind::IllFormedEndo);
  EXPECT_REID_ERROR(endo(2, IntMatrix(2, 0), IntMatrix{{1}}), ErrorKind::IllFormedEndo);
  EXPECT_TRUE(endo(1, IntMatrix{{6}}, IntMatrix{{5}}).is_automorphism());
  EXPECT_FALSE(endo(1, IntMatrix{{4}}, IntMatrix{{2}}).is_automorphism());
  EXPECT_FALSE(endo(1, IntMatrix(1, 0), IntMatrix{{2}}).is_automorphism());
}

TEST(TorsionDecompose, KnownValues) {
  auto z6 = torsion_decompose(LatticeAbelianGroup::cyclic_sum({6}));
  ASSERT_EQ(z6.parts.size(), 2u);
  EXPECT_EQ(z6.parts[0], (PrimaryPart{2, {1}}));
  EXPECT_EQ(z6.parts[1], (PrimaryPart{3, {1}}));
  auto free3 = torsion_decompose(LatticeAbelianGroup::free(3));
  EXPECT_EQ(free3.free_rank, 3u);
  EXPECT_TRUE(free3.parts.empty());
  auto z42 = torsion_decompose(LatticeAbelianGroup::cyclic_sum({4, 2}));
  ASSERT_EQ(z42.parts.size(), 1u);
  EXPECT_EQ(z42.parts[0], (PrimaryPart{2, {2, 1}}));
}

TEST(AbelianEngine, FiniteGroupsMatchElementwiseEnumeration) {
  std::mt19937 rng(2024);
  const std::vector<std::vector<long long>> shapes = {{6}, {4, 2}, {3, 3}, {2, 2, 2}, {4, 4}, {5, 10}, {2, 6, 6}, {12}};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const auto& n = shapes[rng() % shapes.size()];
    const std::size_t k = n.size();
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng() % 13) - 6;
    IntMatrix rel(k, k), mm(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      rel(i, i) = n[i];
      for (std::size_t j = 0; j < k; ++j) mm(i, j) = m[i][j];
    }
    std::optional<LatticeAbelianEndo> e;
    try {
      e.emplace(LatticeAbelianGroup(k, rel), mm);
    } catch (const Error&) {
      continue;  // not well defined on this lattice
    }
    ++checked;
    auto [r, fixed] = brute_force(Direct{n}, m);
    ASSERT_EQ(reidemeister_abelian(*e), Count(BigInt(r)));
    ASSERT_EQ(fixed_abelian(*e).order(), Count(BigInt(fixed)));
    FiniteAbelianModel model(e->group());
    ASSERT_EQ(twisted_orbit_count(model, mm), r);
    auto w = tbft_witness_abelian(*e);
    ASSERT_EQ(w.order, BigInt(r));
    ASSERT_TRUE(w.induced_is_identity);
    ASSERT_TRUE(w.singleton_classes);
    ASSERT_TRUE(w.bijection_ok);
  }
  EXPECT_GE(checked, 100);
}

TEST(AbelianEngine, TorsionFreeDeterminantLaw) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng() % 21) - 10;
    auto e = endo(n, IntMatrix(n, 0), m);
    BigInt det = determinant(IntMatrix::identity(n) - m);
    Count r = reidemeister_abelian(e);
    if (det == 0) {
      ASSERT_FALSE(r.is_finite());
      ASSERT_GT(fixed_abelian(e).free_rank, 0u);
    } else {
      ASSERT_EQ(r, Count(BigInt(abs(det))));
      ASSERT_TRUE(fixed_abelian(e).is_trivial());
    }
    ASSERT_TRUE(fin_fix_check(e).pass);
  }
}

TEST(TbftWitness, KnownValues) {
  auto quarter = endo(2, IntMatrix(2, 0), IntMatrix{{0, -1}, {1, 0}});
  auto w = tbft_witness_abelian(quarter);
  EXPECT_EQ(w.order, 2);
  EXPECT_TRUE(w.bijection_ok);
  // Explicit coset listing: Im(1 - M) = {(a, b) : a + b even}.
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b) {
      IntVector v{a, b};
      EXPECT_EQ(LatticeAbelianGroup(2, IntMatrix{{1, 1}, {-1, 1}}).is_relation(v), (a + b) % 2 == 0);
    }

  auto neg = endo(1, IntMatrix(1, 0), IntMatrix{{-1}});
  auto wn = tbft_witness_abelian(neg);
  EXPECT_EQ(wn.order, 2);
  EXPECT_EQ(wn.quotient.shape().invariant_factors, (std::vector<BigInt>{2}));
  EXPECT_TRUE(wn.bijection_ok);

  EXPECT_REID_ERROR(tbft_witness_abelian(endo(1, IntMatrix(1, 0), IntMatrix{{1}})), ErrorKind::InfiniteReidemeister);
}

TEST(FixedOnTorsion, MixedGroups) {
  // Z^2 + Z/4 with the free part acted on by a quarter turn and the torsion part by -1.
  IntMatrix rel(3, 1);
  rel(2, 0) = 4;
  auto e = endo(3, rel, IntMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}});
  auto f = check_fixed_on_torsion(e);
  EXPECT_TRUE(f.applies);
  EXPECT_TRUE(f.holds);
  EXPECT_EQ(f.fixed_total.order(), Count(BigInt(2)));

  // Identity on the free part: the check does not apply.
  auto g = endo(2, IntMatrix{{0}, {3}}, IntMatrix{{1, 0}, {0, 2}});
  EXPECT_FALSE(check_fixed_on_torsion(g).applies);
}

TEST(FinFix, KnownValues) {
  auto quarter = fin_fix_check(endo(2, IntMatrix(2, 0), IntMatrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(quarter.reidemeister, Count(BigInt(2)));
  EXPECT_EQ(quarter.fixed, Count(BigInt(1)));
  EXPECT_TRUE(quarter.pass);
  auto id = fin_fix_check(endo(1, IntMatrix(1, 0), IntMatrix{{1}}));
  EXPECT_FALSE(id.reidemeister.is_finite());
  EXPECT_TRUE(id.pass);
}
