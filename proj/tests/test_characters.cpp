#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reid/characters.hpp"
#include "reid/constructions.hpp"
#include "reid/twisted.hpp"
#include "test_support.hpp"

using namespace reid;

namespace {

std::vector<std::uint64_t> sorted_degrees(const ModPCharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

Automorphism power_map(const GroupPtr& cyclic, std::int64_t k) {
  ElemId g = cyclic->generator_ids()[0];
  return automorphism_from_images(cyclic, std::vector<ElemId>{cyclic->pow(g, k)});
}

}  // namespace

TEST(ChoosePrime, Conditions) {
  // p = 1 mod e and p > 2 sqrt(n); smallest such prime.
  EXPECT_EQ(choose_prime(6, 6), 7u);
  EXPECT_EQ(choose_prime(60, 30), 31u);
  EXPECT_EQ(choose_prime(1, 1), 3u);
  for (std::size_t n : {8u, 24u, 27u, 120u}) {
    for (std::size_t e : {2u, 4u, 6u, 12u}) {
      ModP p = choose_prime(n, e);
      EXPECT_TRUE(modp::is_prime(p));
      EXPECT_EQ(p % e, 1u);
      EXPECT_GT(p * p, 4 * n);
      for (ModP q = 2; q < p; ++q) EXPECT_FALSE(modp::is_prime(q) && q % e == 1 && q * q > 4 * n);
    }
  }
}

TEST(CharacterTable, KnownDegreePatterns) {
  // Degree lists of the ordinary character tables, from standard references.
  EXPECT_EQ(sorted_degrees(character_table(groups::symmetric(3))), (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(sorted_degrees(character_table(groups::symmetric(4))), (std::vector<std::uint64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(sorted_degrees(character_table(groups::alternating(4))), (std::vector<std::uint64_t>{1, 1, 1, 3}));
  EXPECT_EQ(sorted_degrees(character_table(groups::alternating(5))), (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
  EXPECT_EQ(sorted_degrees(character_table(groups::quaternion(8))), (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_degrees(character_table(groups::dihedral(10))), (std::vector<std::uint64_t>{1, 1, 2, 2}));
  EXPECT_EQ(sorted_degrees(character_table(groups::symmetric(5))),
            (std::vector<std::uint64_t>{1, 1, 4, 4, 5, 5, 6}));
  std::vector<std::uint64_t> heis(9, 1);
  heis.push_back(3);
  heis.push_back(3);
  EXPECT_EQ(sorted_degrees(character_table(groups::heisenberg(3))), heis);
}

TEST(CharacterTable, StructuralInvariants) {
  for (const auto& g : {groups::cyclic(7), groups::abelian({2, 4}), groups::symmetric(3), groups::dihedral(8),
                        groups::quaternion(8), groups::alternating(4), groups::symmetric(4), groups::dicyclic(3),
                        groups::heisenberg(3), groups::alternating(5)}) {
    auto t = character_table(g);
    std::vector<oracle::Img> raw;
    for (ElemId i = 0; i < g->order(); ++i) raw.push_back(oracle::images_of(g->element(i)));
    EXPECT_EQ(t.rows.size(), oracle::class_count(raw));
    std::uint64_t sq = 0;
    for (auto d : t.degrees) sq += d * d;
    EXPECT_EQ(sq, g->order());
    EXPECT_TRUE(orthogonality_holds(t));
    std::set<std::vector<ModP>> distinct(t.rows.begin(), t.rows.end());
    EXPECT_EQ(distinct.size(), t.rows.size());
    // Trivial character first; its row is all ones.
    EXPECT_EQ(t.rows.front(), std::vector<ModP>(t.class_count(), 1));
    for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(t.rows[i][0], t.degrees[i] % t.prime);
  }
}

TEST(CharacterTable, AbelianFastPathAgreesWithSplitting) {
  CharacterOptions slow;
  slow.abelian_fast_path = false;
  for (const auto& g : {groups::cyclic(6), groups::abelian({2, 2, 2}), groups::abelian({4, 4}), groups::cyclic(8)}) {
    auto a = character_table(g);
    auto b = character_table(g, slow);
    EXPECT_EQ(a.prime, b.prime);
    EXPECT_EQ(a.rows, b.rows);
  }
}

TEST(CharacterTable, Errors) {
  CharacterOptions small;
  small.order_cap = 10;
  EXPECT_REID_ERROR(character_table(groups::symmetric(4), small), ErrorKind::CapExceeded);
}

TEST(CharacterTable, Deterministic) {
  auto a = character_table(groups::symmetric(4));
  auto b = character_table(groups::symmetric(4));
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.prime, b.prime);
}

TEST(ClassPermutation, KnownValues) {
  auto s3 = groups::symmetric(3);
  auto t = character_table(s3);
  auto cp = class_permutation(t, Automorphism::inner(s3, 1));
  for (std::uint32_t c = 0; c < cp.perm.size(); ++c) EXPECT_EQ(cp.perm[c], c);

  auto c5 = groups::cyclic(5);
  auto t5 = character_table(c5);
  auto cp5 = class_permutation(t5, power_map(c5, 2));
  EXPECT_EQ(fixed_character_count(t5, cp5), 1u);
}

TEST(Tbft, WorkedTriples) {
  auto c5 = verify_tbft_finite(power_map(groups::cyclic(5), 2));
  EXPECT_EQ(c5.reidemeister, 1u);
  EXPECT_EQ(c5.fixed_characters, 1u);
  EXPECT_TRUE(c5.equal);

  auto s3 = groups::symmetric(3);
  auto inner = verify_tbft_finite(Automorphism::inner(s3, s3->id_of(Perm::from_cycles("(0 1)", 3))));
  EXPECT_EQ(inner.reidemeister, 3u);
  EXPECT_EQ(inner.fixed_characters, 3u);

  auto c6 = verify_tbft_finite(power_map(groups::cyclic(6), -1));
  EXPECT_EQ(c6.reidemeister, 2u);
  EXPECT_EQ(c6.fixed_characters, 2u);
}

TEST(Tbft, FixedCharactersMatchBurnsideCount) {
  for (const auto& g : {groups::dihedral(8), groups::quaternion(8), groups::alternating(4), groups::abelian({2, 4}),
                        groups::dihedral(12), groups::symmetric(4)}) {
    auto t = character_table(g);
    for (const auto& phi : all_automorphisms(g)) {
      auto fixed = fixed_character_count(t, class_permutation(t, phi));
      ASSERT_EQ(fixed, oracle::burnside_reidemeister(oracle::table_of(phi)));
      // Twisting by an inner automorphism changes nothing.
      ASSERT_EQ(fixed_character_count(t, class_permutation(t, compose_with_inner(phi, g->order() - 1))), fixed);
    }
  }
}

TEST(ModP, Arithmetic) {
  EXPECT_EQ(modp::pow(3, 4, 7), 4u);
  EXPECT_EQ(modp::inv(3, 7) * 3 % 7, 1u);
  EXPECT_TRUE(modp::is_prime(97));
  EXPECT_FALSE(modp::is_prime(91));
  EXPECT_EQ(modp::primitive_root(7), 3u);
}
