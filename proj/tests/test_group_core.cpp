#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reid/constructions.hpp"
#include "reid/group.hpp"
#include "reid/lattice.hpp"
#include "test_support.hpp"

using namespace reid;

namespace {

std::vector<oracle::Img> raw_elements(const FiniteGroup& g) {
  std::vector<oracle::Img> out;
  for (ElemId i = 0; i < g.order(); ++i) out.push_back(oracle::images_of(g.element(i)));
  return out;
}

std::vector<GroupPtr> small_groups() {
  return {groups::trivial(),       groups::cyclic(6),        groups::abelian({2, 2}), groups::symmetric(3),
          groups::dihedral(8),     groups::quaternion(8),    groups::alternating(4),  groups::abelian({2, 2, 2}),
          groups::dihedral(12),    groups::symmetric(4)};
}

}  // namespace

TEST(Perm, CycleParsingRoundTrip) {
  Perm p = Perm::from_cycles("(0 1 2)(3 4)", 5);
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(2), 0u);
  EXPECT_EQ(p(4), 3u);
  EXPECT_EQ(p.to_cycles(), "(0 1 2)(3 4)");
  EXPECT_EQ(Perm::from_cycles("()", 3), Perm::identity(3));
  EXPECT_EQ(Perm::identity(4).to_cycles(), "()");
}

TEST(Perm, ProductComposesRightToLeft) {
  Perm a = Perm::from_cycles("(0 1)", 3);
  Perm b = Perm::from_cycles("(1 2)", 3);
  Perm ab = a * b;  // first b, then a
  EXPECT_EQ(ab(0), 1u);
  EXPECT_EQ(ab(1), 2u);
  EXPECT_EQ(ab(2), 0u);
  EXPECT_EQ(ab * ab.inverse(), Perm::identity(3));
}

TEST(Perm, RejectsBadInput) {
  EXPECT_REID_ERROR(Perm(std::vector<Point>{0, 0, 1}), ErrorKind::InvalidPermutation);
  EXPECT_REID_ERROR(Perm::from_cycles("(0 1 2", 3), ErrorKind::SpecParseError);
  EXPECT_REID_ERROR(Perm::from_cycles("(0 5)", 3), ErrorKind::SpecParseError);
  EXPECT_REID_ERROR(Perm::from_cycles("(0 1 0)", 3), ErrorKind::SpecParseError);
  EXPECT_REID_ERROR(Perm::identity(2) * Perm::identity(3), ErrorKind::DegreeMismatch);
}

TEST(GenerateGroup, KnownValues) {
  auto s3 = generate_group(3, {Perm::from_cycles("(0 1 2)", 3), Perm::from_cycles("(0 1)", 3)});
  EXPECT_EQ(s3->order(), 6u);
  auto triv = generate_group(4, {});
  EXPECT_EQ(triv->order(), 1u);
  EXPECT_REID_ERROR(generate_group(3, {Perm::identity(4)}), ErrorKind::DegreeMismatch);
  GroupOptions tiny;
  tiny.closure_cap = 10;
  EXPECT_REID_ERROR(generate_group(5, {Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1)", 5)}, tiny),
                    ErrorKind::ClosureCapExceeded);
}

TEST(GenerateGroup, MatchesNaiveClosure) {
  for (const auto& g : small_groups()) {
    std::vector<oracle::Img> gens;
    for (const auto& p : g->generators()) gens.push_back(oracle::images_of(p));
    auto naive = oracle::closure(gens, g->degree());
    auto ours = raw_elements(*g);
    EXPECT_EQ(std::set<oracle::Img>(ours.begin(), ours.end()), naive);
    EXPECT_TRUE(std::is_sorted(ours.begin(), ours.end())) << "ids must follow lexicographic order";
    EXPECT_TRUE(g->element(FiniteGroup::kIdentity).is_identity());
  }
}

TEST(GenerateGroup, MultiplicationAgreesWithComposition) {
  auto g = groups::symmetric(4);
  for (ElemId a = 0; a < g->order(); ++a)
    for (ElemId b = 0; b < g->order(); ++b) ASSERT_EQ(g->element(g->mul(a, b)), g->element(a) * g->element(b));
  for (ElemId a = 0; a < g->order(); ++a) EXPECT_EQ(g->mul(a, g->inv(a)), FiniteGroup::kIdentity);
}

TEST(Constructions, Orders) {
  EXPECT_EQ(groups::cyclic(7)->order(), 7u);
  EXPECT_EQ(groups::dihedral(10)->order(), 10u);
  EXPECT_EQ(groups::dihedral(4)->order(), 4u);
  EXPECT_EQ(groups::quaternion(16)->order(), 16u);
  EXPECT_EQ(groups::dicyclic(3)->order(), 12u);
  EXPECT_EQ(groups::heisenberg(3)->order(), 27u);
  EXPECT_EQ(groups::alternating(5)->order(), 60u);
  EXPECT_EQ(groups::direct_product(groups::alternating(5), groups::cyclic(2))->order(), 120u);
  EXPECT_TRUE(groups::abelian({4, 4})->is_abelian());
  EXPECT_FALSE(groups::heisenberg(3)->is_abelian());
  EXPECT_EQ(groups::heisenberg(3)->exponent(), 3u);
  EXPECT_EQ(groups::quaternion(8)->exponent(), 4u);
}

TEST(ConjugacyClasses, KnownValuesAndOracle) {
  EXPECT_EQ(conjugacy_classes(*groups::symmetric(3)).size(), 3u);
  EXPECT_EQ(conjugacy_classes(*groups::cyclic(5)).size(), 5u);
  EXPECT_EQ(conjugacy_classes(*groups::alternating(5)).size(), 5u);
  for (const auto& g : small_groups())
    EXPECT_EQ(conjugacy_classes(*g).size(), oracle::class_count(raw_elements(*g)));
}

TEST(DerivedSeries, KnownValues) {
  auto s3 = derived_series(groups::symmetric(3));
  EXPECT_TRUE(s3.soluble);
  EXPECT_EQ(s3.derived_length, 2u);
  EXPECT_EQ(s3.terms[1].order(), 3u);

  auto s4 = derived_series(groups::symmetric(4));
  EXPECT_EQ(s4.derived_length, 3u);
  std::vector<std::size_t> orders;
  for (const auto& t : s4.terms) orders.push_back(t.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 12, 4, 1}));

  auto a5 = derived_series(groups::alternating(5));
  EXPECT_FALSE(a5.soluble);
  EXPECT_FALSE(a5.derived_length.has_value());

  EXPECT_EQ(derived_series(groups::trivial()).derived_length, 0u);
}

TEST(SubgroupCounting, KnownValues) {
  EXPECT_EQ(subgroups_of_index(groups::abelian({2, 2}), 2).size(), 3u);
  EXPECT_EQ(subgroups_of_index(groups::symmetric(3), 2).size(), 1u);
  EXPECT_EQ(subgroups_of_index(groups::symmetric(3), 3).size(), 3u);
  EXPECT_TRUE(subgroups_of_index(groups::symmetric(3), 4).empty());
  EXPECT_EQ(subgroups_of_index(groups::cyclic(12), 1).size(), 1u);
}

TEST(SubgroupCounting, MatchesSubsetEnumeration) {
  for (const auto& g : {groups::abelian({2, 2}), groups::symmetric(3), groups::dihedral(8), groups::quaternion(8),
                        groups::alternating(4), groups::dihedral(12), groups::abelian({2, 2, 2})}) {
    auto brute = oracle::subgroups_by_subsets(raw_elements(*g));
    auto ours = all_subgroups(g);
    ASSERT_EQ(ours.size(), brute.size()) << "order " << g->order();
    for (std::size_t n = 1; n <= g->order(); ++n) {
      std::size_t expected = 0;
      for (const auto& s : brute) expected += s.size() * n == g->order();
      EXPECT_EQ(subgroups_of_index(g, n).size(), expected) << "order " << g->order() << " index " << n;
    }
  }
}

TEST(MinGenerators, KnownValuesAndRank) {
  EXPECT_EQ(min_generators(whole_group(groups::abelian({2, 2, 2}))), 3u);
  EXPECT_EQ(min_generators(whole_group(groups::symmetric(4))), 2u);
  EXPECT_EQ(min_generators(whole_group(groups::cyclic(12))), 1u);
  EXPECT_EQ(min_generators(trivial_subgroup(groups::cyclic(3))), 0u);
  EXPECT_EQ(rank(groups::abelian({2, 2})), 2u);
  EXPECT_EQ(rank(groups::symmetric(4)), 2u);
  EXPECT_EQ(rank(groups::abelian({2, 2, 2})), 3u);
  EXPECT_EQ(rank(groups::quaternion(8)), 2u);
  LatticeOptions small;
  small.rank_order_cap = 10;
  EXPECT_REID_ERROR(rank(groups::symmetric(4), small), ErrorKind::BudgetExceeded);
}

TEST(MinGenerators, GeneratingSetGeneratesAndNothingSmallerDoes) {
  for (const auto& g : small_groups()) {
    auto gens = minimal_generating_set(whole_group(g));
    EXPECT_EQ(generated_subgroup(g, gens).order(), g->order());
    if (gens.empty()) continue;
    // Brute force: no generating set of size |gens| - 1 exists.
    const std::size_t k = gens.size() - 1;
    std::vector<ElemId> pick(k, 0);
    bool found = false;
    std::function<void(std::size_t, ElemId)> rec = [&](std::size_t depth, ElemId from) {
      if (found) return;
      if (depth == k) {
        found = generated_subgroup(g, pick).order() == g->order();
        return;
      }
      for (ElemId x = from; x < g->order(); ++x) {
        pick[depth] = x;
        rec(depth + 1, x + 1);
      }
    };
    rec(0, 0);
    EXPECT_FALSE(found) << "order " << g->order();
  }
}

TEST(Quotient, KnownValues) {
  auto s3 = groups::symmetric(3);
  auto a3 = derived_series(s3).terms[1];
  auto q = quotient(a3);
  EXPECT_EQ(q.group->order(), 2u);
  EXPECT_EQ(quotient(whole_group(s3)).group->order(), 1u);
  ElemId t = s3->id_of(Perm::from_cycles("(0 1)", 3));
  EXPECT_REID_ERROR(quotient(generated_subgroup(s3, std::vector<ElemId>{t})), ErrorKind::NotNormal);

  // The projection is a homomorphism onto the quotient.
  auto d8 = groups::dihedral(8);
  auto qz = quotient(center(d8));
  EXPECT_EQ(qz.group->order(), 4u);
  for (ElemId a = 0; a < d8->order(); ++a)
    for (ElemId b = 0; b < d8->order(); ++b)
      ASSERT_EQ(qz.projection[d8->mul(a, b)], qz.group->mul(qz.projection[a], qz.projection[b]));
}

TEST(CharacteristicCore, KnownValues) {
  auto s3 = groups::symmetric(3);
  ElemId t = s3->id_of(Perm::from_cycles("(0 1)", 3));
  auto core = characteristic_core(generated_subgroup(s3, std::vector<ElemId>{t}));
  EXPECT_TRUE(core.is_trivial());

  auto v4 = groups::abelian({2, 2});
  auto h = subgroups_of_index(v4, 2).front();
  EXPECT_TRUE(characteristic_core(h).is_trivial());

  auto c6 = groups::cyclic(6);
  auto h3 = subgroups_of_index(c6, 2).front();
  EXPECT_EQ(characteristic_core(h3), h3);
}

TEST(Subgroups, NormalSubgroupsOfS4) {
  auto normals = normal_subgroups(groups::symmetric(4));
  std::vector<std::size_t> orders;
  for (const auto& n : normals) orders.push_back(n.order());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 4, 12, 24}));
}

TEST(Subgroups, CenterAndCentralizer) {
  EXPECT_EQ(center(groups::dihedral(8)).order(), 2u);
  EXPECT_EQ(center(groups::quaternion(8)).order(), 2u);
  EXPECT_EQ(center(groups::symmetric(3)).order(), 1u);
  EXPECT_EQ(center(groups::heisenberg(3)).order(), 3u);
  auto s3 = groups::symmetric(3);
  EXPECT_EQ(centralizer(s3, s3->id_of(Perm::from_cycles("(0 1 2)", 3))).order(), 3u);
}

TEST(CharacteristicCore, CyclicFourAndWholeGroup) {
  auto c4 = groups::cyclic(4);
  auto h = subgroups_of_index(c4, 2);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(characteristic_core(h.front()), h.front());
  EXPECT_EQ(characteristic_core(whole_group(c4)), whole_group(c4));
}

TEST(Properties, QuotientOrderTimesKernel) {
  for (const auto& g : small_groups())
    for (const auto& n : normal_subgroups(g)) EXPECT_EQ(quotient(n).group->order() * n.order(), g->order());
}

TEST(Properties, DerivedTermsStrictlyDecreaseAndAreNormal) {
  for (const auto& g : small_groups()) {
    auto s = derived_series(g);
    for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
      EXPECT_LT(s.terms[i + 1].order(), s.terms[i].order());
      EXPECT_TRUE(s.terms[i + 1].members().is_subset_of(s.terms[i].members()));
      EXPECT_TRUE(s.terms[i + 1].is_normal());
    }
  }
  auto ab = derived_series(groups::cyclic(6));
  EXPECT_EQ(ab.derived_length, 1u);
}
