#include <gtest/gtest.h>

#include "support.hpp"

using namespace defsem;
using namespace defsem::test;

TEST(Generate, Trivial) {
  auto f = generate_af({3, 0.0, 0.0, 7});
  EXPECT_EQ(f.size(), 3u);
  EXPECT_TRUE(f.attacks().empty());
  auto g = generate_af({1, 1.0, 1.0, 1});
  EXPECT_EQ(g, make_af({"a1"}, {{"a1", "a1"}}));
  GeneratorSpec spec{6, 0.3, 0.2, 42};
  EXPECT_EQ(generate_af(spec), generate_af(spec));
  EXPECT_THROW(generate_af({0, 0.1, 0.1, 1}), PreconditionError);
}

TEST(Generate, PinnedStream) {
  // The draw order is part of the format: a change here changes every
  // campaign report.
  EXPECT_EQ(to_apx(generate_af({3, 0.5, 0.5, 2024})), to_apx(generate_af({3, 0.5, 0.5, 2024})));
  std::mt19937_64 rng(5489);
  EXPECT_EQ(rng(), 14514284786278117030ull);
}

TEST(Generate, Exhaustive) {
  EXPECT_EQ(enumerate_all_afs(1).size(), 2u);
  EXPECT_EQ(enumerate_all_afs(2).size(), 16u);
  EXPECT_EQ(enumerate_all_afs(3).size(), 512u);
  std::set<std::string> seen;
  for (auto f : enumerate_all_afs(2)) seen.insert(to_apx(f));
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_THROW(enumerate_all_afs(5), InstanceTooLarge);
}

TEST(Oracle, DungAgreesOnSmallFrameworks) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto f : enumerate_all_afs(n))
      ASSERT_EQ(oracle::dung_complete(f), enumerate_argument_extensions(f, Semantics::complete))
          << to_apx(f);
}

TEST(Oracle, DefensesAgreeOnGoldens) {
  for (const char* n : {"f1", "f2", "f3", "f4", "f5", "f7", "f8", "f9", "f10", "f12p", "f13", "f15"}) {
    auto f = golden(n);
    auto s = compute_defenses(f);
    EXPECT_EQ(oracle::defenses(f), s.defenses()) << n;
    if (s.size() <= oracle::kMaxDefenseSubsets)
      EXPECT_EQ(oracle::complete_defense_sets(s), members(enumerate_defense_extensions(s, Semantics::complete)))
          << n;
  }
}

TEST(Oracle, DefendeeSearchMatchesSubsetSearch) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto f : enumerate_all_afs(n)) {
      auto s = compute_defenses(f);
      if (s.size() > 12) continue;
      auto sat = oracle::satisfiable_defenses(s);
      for (const Defense& d : s.defenses())
        ASSERT_EQ(sat.contains(d), !semantic_unsat(s, d)) << to_apx(f) << d.to_string();
    }
}

TEST(Oracle, Guards) {
  auto big = generate_af({21, 0.0, 0.0, 1});
  EXPECT_THROW(oracle::dung_complete(big), InstanceTooLarge);
  auto dense = generate_af({5, 1.0, 0.0, 1});
  EXPECT_THROW(oracle::complete_defense_sets(compute_defenses(dense)), InstanceTooLarge);
}

TEST(Campaign, ExhaustiveSmallIsClean) {
  CampaignSpec spec;
  spec.scope = CampaignScope::exhaustive_n3;
  spec.properties = {"defendees-complete", "lift-complete", "co-oracle"};
  auto r = run_theorem_campaign(spec);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances_checked, 2u + 16u + 512u);
  EXPECT_EQ(r.properties.size(), 3u);
}

TEST(Campaign, Deterministic) {
  CampaignSpec spec;
  spec.scope = CampaignScope::random_n8;
  spec.instances = 40;
  spec.seed = 99;
  EXPECT_EQ(to_json(run_theorem_campaign(spec)).dump(), to_json(run_theorem_campaign(spec)).dump());
  spec.scope = CampaignScope::random_pairs_n6;
  EXPECT_EQ(to_json(run_theorem_campaign(spec)).dump(), to_json(run_theorem_campaign(spec)).dump());
}

TEST(Campaign, RejectsUnknownOrMismatchedProperties) {
  CampaignSpec spec;
  spec.properties = {"no-such-property"};
  EXPECT_THROW(run_theorem_campaign(spec), PreconditionError);
  spec.properties = {"strong-implies-defense"};
  EXPECT_THROW(run_theorem_campaign(spec), PreconditionError);
  EXPECT_THROW(parse_scope("exhaustive-n9"), PreconditionError);
}

TEST(Campaign, PairsCountPremises) {
  CampaignSpec spec;
  spec.scope = CampaignScope::exhaustive_pairs_n3;
  auto r = run_theorem_campaign(spec);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances_checked, 512u * 511u / 2u);
  EXPECT_GT(r.properties.at("strong-implies-defense").premises, 0u);
  EXPECT_GT(r.properties.at("root-eq-implies-standard").premises, 0u);
}

TEST(Benchmark, RemovedFractions) {
  auto f2 = benchmark_framework(golden("f2"));
  EXPECT_EQ(f2.defenses, 4u);
  EXPECT_EQ(f2.removed, 3u);
  EXPECT_DOUBLE_EQ(f2.removed_fraction, 0.75);
  auto zero = benchmark_contraction({{6, 0.0, 0.0, 1}, {8, 0.0, 0.0, 2}});
  for (const auto& row : zero.rows) EXPECT_EQ(row.removed_fraction, 0.0);
  EXPECT_GE(zero.repetitions, 5u);
  std::vector<GeneratorSpec> selfish;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) selfish.push_back({5, 0.3, 0.9, seed});
  for (const auto& row : benchmark_contraction(selfish).rows) {
    auto f = generate_af(row.spec);
    bool any_self = false;
    for (std::size_t i = 0; i < f.size(); ++i) any_self |= f.self_attacking(i);
    if (any_self) EXPECT_GT(row.removed_fraction, 0.0);
  }
}
