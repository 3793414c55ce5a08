#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reid/constructions.hpp"
#include "reid/corpus.hpp"
#include "reid/pipeline.hpp"
#include "test_support.hpp"

using namespace reid;

TEST(DerivedReduction, KnownValues) {
  auto c6 = groups::cyclic(6);
  auto ab = derived_reduction(Automorphism::identity(c6));
  EXPECT_EQ(ab.levels.size(), 1u);
  EXPECT_TRUE(ab.ok());

  auto s3 = groups::symmetric(3);
  auto t = derived_reduction(Automorphism::identity(s3));
  ASSERT_EQ(t.levels.size(), 2u);
  EXPECT_EQ(t.levels[0].r_phi, 3u);
  EXPECT_EQ(t.levels[0].r_next, 3u);
  EXPECT_EQ(t.levels[0].fixed_alpha, 2u);
  EXPECT_TRUE(t.levels[0].inequality_ok);
  EXPECT_EQ(t.levels[1].r_phi, 3u);
  EXPECT_TRUE(t.ok());

  auto d8 = groups::dihedral(8);
  for (ElemId x = 0; x < d8->order(); ++x) {
    auto tr = derived_reduction(Automorphism::inner(d8, x));
    EXPECT_EQ(tr.series.terms.size(), 3u);
    EXPECT_TRUE(tr.ok());
  }

  EXPECT_REID_ERROR(derived_reduction(Automorphism::identity(groups::alternating(5))), ErrorKind::NotSoluble);
}

TEST(DerivedReduction, LevelsMatchOracleCounts) {
  auto s4 = groups::symmetric(4);
  for (const auto& phi : all_automorphisms(s4)) {
    auto tr = derived_reduction(phi);
    ASSERT_TRUE(tr.ok());
    const auto& terms = tr.series.terms;
    for (std::size_t i = 0; i < tr.levels.size(); ++i) {
      auto ri = restrict(phi, terms[i]);
      EXPECT_EQ(tr.levels[i].r_phi, oracle::burnside_reidemeister(oracle::table_of(ri.aut)));
    }
  }
}

TEST(InnerBound, KnownValues) {
  auto d8 = groups::dihedral(8);
  auto b = inner_bound_check(center(d8));
  EXPECT_EQ(b.inner_order, 4u);
  EXPECT_EQ(b.kernel_order, 2u);
  EXPECT_EQ(b.quotient_rank, 2u);
  EXPECT_EQ(b.bound, 8);
  EXPECT_TRUE(b.holds);

  auto c6 = groups::cyclic(6);
  auto t = inner_bound_check(trivial_subgroup(c6));
  EXPECT_EQ(t.inner_order, 1u);
  EXPECT_EQ(t.bound, 1);
  EXPECT_TRUE(t.holds);

  auto q = inner_bound_check(center(groups::quaternion(8)));
  EXPECT_EQ(q.inner_order, 4u);
  EXPECT_EQ(q.bound, 8);

  auto s3 = groups::symmetric(3);
  EXPECT_REID_ERROR(inner_bound_check(trivial_subgroup(s3)), ErrorKind::QuotientNotAbelian);
}

TEST(AbelianRank, PRanks) {
  EXPECT_EQ(abelian_rank(*groups::abelian({2, 2, 2})), 3u);
  EXPECT_EQ(abelian_rank(*groups::cyclic(12)), 1u);
  EXPECT_EQ(abelian_rank(*groups::abelian({6, 2})), 2u);
  EXPECT_EQ(abelian_rank(*groups::trivial()), 0u);
}

TEST(SolubleProfile, KnownValues) {
  auto s4 = soluble_profile(Automorphism::identity(groups::symmetric(4)));
  EXPECT_EQ(s4.radical_index, 1u);
  EXPECT_EQ(s4.radical_derived_length, 3u);
  auto a5 = soluble_profile(Automorphism::identity(groups::alternating(5)));
  EXPECT_EQ(a5.radical_order, 1u);
  EXPECT_EQ(a5.radical_index, 60u);
  auto prod = groups::direct_product(groups::alternating(5), groups::cyclic(2));
  auto p = soluble_profile(Automorphism::identity(prod));
  EXPECT_EQ(p.radical_order, 2u);
  EXPECT_EQ(p.radical_index, 60u);
}

TEST(SubgroupCountCheck, KleinFour) {
  auto rows = subgroup_count_check(groups::abelian({2, 2}), 8);
  EXPECT_EQ(rows[1].count, 3u);
  EXPECT_EQ(rows[1].bound, 4);
  for (const auto& r : rows) EXPECT_TRUE(r.holds);
  EXPECT_EQ(rows[0].count, 1u);
}

TEST(RunCorpus, EmptyConfig) {
  EXPECT_TRUE(run_corpus(parse_corpus_config(Json::object())).empty());
  EXPECT_TRUE(run_corpus(parse_corpus_config(Json{{"groups", Json::array()}})).empty());
}

TEST(RunCorpus, CorruptedAutomorphismIsCaptured) {
  Json cfg = Json::parse(R"j({"groups":[{"id":"C3","group":{"name":"cyclic","args":[3]},
                                          "automorphisms":[{"map":[0,1,1]},"identity"]}]})j");
  auto reports = run_corpus(parse_corpus_config(cfg));
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].case_id, "C3/group");
  EXPECT_TRUE(reports[0].passed());
  ASSERT_TRUE(reports[1].error.has_value());
  EXPECT_NE(reports[1].error->find("NotAHomomorphism"), std::string::npos);
  EXPECT_FALSE(reports[1].passed());
  EXPECT_TRUE(reports[2].passed());
}

TEST(RunCorpus, UnknownConstructorIsConfigError) {
  Json cfg = Json::parse(R"j({"groups":[{"id":"X","group":{"name":"monster"}}]})j");
  EXPECT_REID_ERROR(parse_corpus_config(cfg), ErrorKind::ConfigError);
  EXPECT_REID_ERROR(parse_corpus_config(Json{{"groups", 3}}), ErrorKind::ConfigError);
}

TEST(RunCorpus, SmallCorpusPassesAndIsDeterministic) {
  Json cfg = Json::parse(R"j({"groups":[{"id":"S3","group":{"name":"symmetric","args":[3]}},
                                          {"id":"Q8","group":{"name":"quaternion","args":[8]}},
                                          {"id":"C4xC2","group":{"name":"abelian","args":[4,2]}}]})j");
  auto config = parse_corpus_config(cfg);
  auto a = to_json(run_corpus(config)).dump();
  auto b = to_json(run_corpus(config)).dump();
  EXPECT_EQ(a, b);
  for (const auto& r : run_corpus(config)) EXPECT_TRUE(r.passed()) << r.case_id;
}

TEST(RunCorpus, SamplingIsSeededAndIncludesIdentity) {
  Json cfg = Json::parse(R"j({"groups":[{"id":"S4","group":{"name":"symmetric","args":[4]}}],
                              "policy":{"all_up_to":10,"sample_size":3,"seed":5}})j");
  auto reports = run_corpus(parse_corpus_config(cfg));
  ASSERT_EQ(reports.size(), 5u);  // group case, identity, three samples
  EXPECT_EQ(reports[1].case_id, "S4/aut0");
  EXPECT_EQ(reports[1].automorphism_order, 1u);
  auto again = run_corpus(parse_corpus_config(cfg));
  for (std::size_t i = 0; i < reports.size(); ++i) EXPECT_EQ(reports[i].case_id, again[i].case_id);
}

TEST(DefaultCorpus, Shape) {
  auto c = default_corpus_config();
  EXPECT_EQ(c.groups.size(), 26u);
  EXPECT_EQ(c.all_automorphisms_up_to, 64u);
}
