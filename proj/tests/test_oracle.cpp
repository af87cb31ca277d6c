#include <gtest/gtest.h>

#include "brute.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "hhorn/oracle.hpp"
#include "hhorn/recognition.hpp"

using namespace hhorn;
using namespace hhorn::oracle;
namespace ht = hhorn::testing;

TEST(TruthTable, Basics) {
  TruthTable t(GroundSet::numbered(2), false);
  EXPECT_EQ(t.entries(), 4u);
  t.set(VarSet{1}, true);
  EXPECT_TRUE(t(VarSet{1}));
  EXPECT_FALSE(t.at(0));
  EXPECT_EQ(t.true_sets(), ht::numbered_family(2, {{2}}));
  EXPECT_EQ(t.false_sets().size(), 3u);
  EXPECT_EQ(TruthTable::from_true_sets(t.true_sets()), t);
}

TEST(TruthTable, TableOfMatchesEvaluate) {
  ht::Rng rng(71);
  for (int round = 0; round < 100; ++round) {
    auto phi = ht::random_mixed_cnf(rng, ht::uniform(rng, 0, 7));
    auto t = table_of(phi);
    for (const auto& s : ht::brute::all_subsets(phi.ground().size())) ASSERT_EQ(t(s), phi.evaluate(s));
    EXPECT_TRUE(is_definite_horn(t));
  }
}

TEST(Oracle, DefiniteHornDetection) {
  EXPECT_FALSE(is_definite_horn(TruthTable(GroundSet::numbered(2), false)));
  TruthTable t(GroundSet::numbered(2), false);
  t.set(VarSet{0}, true);
  t.set(VarSet{1}, true);
  t.set(VarSet{0, 1}, true);
  EXPECT_FALSE(is_definite_horn(t));
  t.set(VarSet{}, true);
  EXPECT_TRUE(is_definite_horn(t));
}

TEST(Oracle, ClosureTable) {
  ht::Rng rng(72);
  for (int round = 0; round < 100; ++round) {
    auto phi = ht::random_mixed_cnf(rng, ht::uniform(rng, 1, 7));
    auto t = table_of(phi);
    auto cl = closure_table(t);
    for (const auto& s : ht::brute::all_subsets(phi.ground().size())) {
      ASSERT_EQ(cl[s.to_index()], phi.closure(s));
      ASSERT_EQ(closure_of(t, s), phi.closure(s));
    }
  }
}

TEST(Oracle, ImplicateSetsSweepMatchesNaive) {
  ht::Rng rng(73);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = ht::uniform(rng, 0, 6);
    auto f = ht::random_table(rng, n, 0.3 + 0.4 * (round % 2));
    ASSERT_EQ(implicate_sets_of(f), hhorn::oracle::detail::implicate_sets_naive(f));
  }
}

TEST(Oracle, ImplicateSetsOfCnf) {
  ht::Rng rng(74);
  for (int round = 0; round < 100; ++round) {
    auto phi = ht::random_mixed_cnf(rng, ht::uniform(rng, 1, 6));
    auto fam = implicate_sets_of(table_of(phi));
    EXPECT_EQ(fam, Hypergraph(phi.ground(), ht::brute::implicate_sets(phi)));
    EXPECT_EQ(union_closure(fam), fam);
    for (const auto& s : ht::brute::all_subsets(phi.ground().size())) {
      ASSERT_EQ(core_of(fam, s), ht::brute::core(phi, s));
    }
  }
}

TEST(Oracle, StandardGenerator) {
  auto fam = ht::numbered_family(3, {{}, {1}, {2}, {1, 2}, {1, 2, 3}});
  EXPECT_EQ(standard_generator_of(fam), ht::numbered_family(3, {{1}, {2}, {1, 2, 3}}));
}

TEST(Oracle, MinimalKeys) {
  ht::Rng rng(75);
  for (int round = 0; round < 100; ++round) {
    auto phi = ht::random_mixed_cnf(rng, ht::uniform(rng, 1, 6));
    EXPECT_EQ(minimal_keys_of(table_of(phi)), Hypergraph(phi.ground(), ht::brute::minimal_keys(phi)));
  }
  auto sd = table_of(circular_cnf(ht::self_dual_five()));
  EXPECT_EQ(minimal_keys_of(sd), ht::bipartite_keys());
}

TEST(Oracle, MaxNontrivialTrueSets) {
  auto phi = circular_cnf(ht::equivalence_family());
  EXPECT_EQ(max_nontrivial_true_sets_of(table_of(phi)), ht::numbered_family(5, {{1, 2, 3}, {4, 5}}));
}

TEST(Oracle, IdualTrueSetsAreComplementedImplicateSets) {
  ht::Rng rng(76);
  for (int round = 0; round < 100; ++round) {
    auto f = ht::random_table(rng, ht::uniform(rng, 1, 5));
    auto fi = idual(f);
    EXPECT_EQ(fi.true_sets(), complement_family(implicate_sets_of(f)));
    EXPECT_TRUE(is_definite_horn(fi));
    EXPECT_TRUE(is_hypergraph_horn(fi));
  }
}

TEST(Oracle, MajorantIsSmallestHypergraphHornMajorant) {
  ht::Rng rng(77);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = ht::uniform(rng, 1, 4);
    auto f = ht::random_table(rng, n);
    auto maj = horn_majorant(f);
    EXPECT_TRUE(is_hypergraph_horn(maj));
    for (const auto& s : ht::brute::all_subsets(n)) {
      EXPECT_TRUE(!f(s) || maj(s));
    }
    EXPECT_EQ(horn_majorant(maj), maj);
    // Any circular CNF above f is above the majorant: test every single edge.
    for (const auto& e : ht::brute::all_subsets(n)) {
      auto g = table_of(circular_cnf(Hypergraph(f.ground(), {e})));
      bool above_f = true;
      bool above_maj = true;
      for (const auto& s : ht::brute::all_subsets(n)) {
        if (f(s) && !g(s)) above_f = false;
        if (maj(s) && !g(s)) above_maj = false;
      }
      EXPECT_EQ(above_f, above_maj);
    }
  }
}

TEST(Oracle, CharacterizationClaimsAgree) {
  ht::Rng rng(78);
  int yes = 0;
  for (int round = 0; round < 200; ++round) {
    auto phi = ht::random_mixed_cnf(rng, ht::uniform(rng, 1, 6));
    auto f = table_of(phi);
    auto rep = check_theorem41(f);
    ASSERT_TRUE(rep.all_agree());
    ASSERT_EQ(rep.implicate_hit, recognize(phi).hypergraph_horn());
    ASSERT_EQ(rep.implicate_hit, ht::brute::hypergraph_horn(phi));
    yes += rep.implicate_hit ? 1 : 0;
  }
  EXPECT_GT(yes, 20);
  EXPECT_LT(yes, 180);
}

TEST(Oracle, CharacterizationsRequireDefiniteHorn) {
  EXPECT_THROW(check_theorem41(TruthTable(GroundSet::numbered(2), false)), NotDefiniteHorn);
}

TEST(Oracle, CapsAreEnforced) {
  EXPECT_THROW(table_of(HornCnf(GroundSet::numbered(evaluation_cap + 1))), GroundTooLarge);
  EXPECT_THROW(implicate_sets_of(TruthTable(GroundSet::numbered(family_cap + 1), true)), GroundTooLarge);
  EXPECT_THROW(is_hypergraph_horn(TruthTable(GroundSet::numbered(pairwise_cap + 1), true)),
               GroundTooLarge);
}

TEST(Oracle, TrueSetsAndImplicateSetsDetermineEachOther) {
  ht::Rng rng(79);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = ht::uniform(rng, 1, 6);
    auto t = table_of(circular_cnf(ht::random_hypergraph(rng, n, ht::uniform(rng, 0, 5), 0.5)));
    auto implicates = implicate_sets_of(t);
    auto trues = t.true_sets();
    for (const auto& s : ht::brute::all_subsets(n)) {
      bool no_implicate_sticks_out = true;
      for (const auto& j : implicates) no_implicate_sticks_out = no_implicate_sticks_out && (j - s).size() != 1;
      ASSERT_EQ(t(s), no_implicate_sticks_out);
      bool no_true_set_below = true;
      for (const auto& u : trues) no_true_set_below = no_true_set_below && (s - u).size() != 1;
      ASSERT_EQ(implicates.contains(s), no_true_set_below);
    }
  }
}

TEST(Oracle, KeysAndMaximalTrueSetsCompose) {
  ht::Rng rng(80);
  for (int round = 0; round < 100; ++round) {
    auto f = ht::random_definite_horn_table(rng, ht::uniform(rng, 1, 6));
    auto keys = minimal_keys_of(f);
    auto maxt = max_nontrivial_true_sets_of(f);
    EXPECT_EQ(maxt, complement_family(minimal_transversals(keys)));
    EXPECT_EQ(keys, minimal_transversals(complement_family(maxt)));
  }
}
