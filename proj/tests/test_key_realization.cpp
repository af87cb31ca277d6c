#include <gtest/gtest.h>

#include "brute.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "hhorn/key_realization.hpp"

using namespace hhorn;
namespace ht = hhorn::testing;

TEST(PotentialImplicateSet, Definition) {
  auto keys = ht::numbered_family(3, {{1}});
  // Maximal non-key set is {2,3}; I sticks out of it by one exactly when it
  // contains 1 and nothing else outside, which is every I holding 1.
  EXPECT_TRUE(is_potential_implicate_set(keys, ht::nums({2, 3})));
  EXPECT_FALSE(is_potential_implicate_set(keys, ht::nums({1, 2})));
  EXPECT_THROW(is_potential_implicate_set(ht::numbered_family(3, {{1}, {1, 2}}), VarSet{}),
               NonSperner);
}

TEST(PotentialImplicateSet, MatchesMaximalIndependentSetTest) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& keys : ht::all_sperner_families(n)) {
      const auto bases = ht::brute::maximal_independent(keys.edges(), n);
      for (const auto& i : ht::brute::all_subsets(n)) {
        bool expect = true;
        for (const auto& m : bases) {
          if ((i - m).size() == 1) expect = false;
        }
        ASSERT_EQ(is_potential_implicate_set(keys, i), expect);
      }
    }
  }
}

TEST(PClosure, IsLargestPotentialSubset) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& keys : ht::all_sperner_families(n)) {
      for (const auto& s : ht::brute::all_subsets(n)) {
        VarSet u;
        for (const auto& i : ht::brute::all_subsets(n)) {
          if (i.subset_of(s) && is_potential_implicate_set(keys, i)) u |= i;
        }
        ASSERT_EQ(p_closure(keys, s), u);
      }
    }
  }
}

TEST(RealizeKeys, BipartiteKeys) {
  auto r = realize_keys(ht::bipartite_keys());
  ASSERT_TRUE(r.realizable());
  EXPECT_EQ(minimal_keys_oracle(circular_cnf(*r.witness)), ht::bipartite_keys());
}

TEST(RealizeKeys, SingleKey) {
  auto keys = ht::numbered_family(3, {{1}});
  auto r = realize_keys(keys);
  ASSERT_TRUE(r);
  EXPECT_EQ(minimal_keys_oracle(circular_cnf(*r.witness)), keys);
}

TEST(RealizeKeys, EmptyKeyMeansEverythingDerivable) {
  auto keys = ht::numbered_family(3, {{}});
  auto r = realize_keys(keys);
  ASSERT_TRUE(r);
  EXPECT_EQ(minimal_keys_oracle(circular_cnf(*r.witness)), keys);
}

TEST(RealizeKeys, EmptyFamilyIsNotRealizable) {
  auto r = realize_keys(ht::numbered_family(3, {}));
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_EQ(r.stalled, VarSet{});
}

TEST(RealizeKeys, NonSpernerInputIsReducedWithWarning) {
  auto r = realize_keys(ht::numbered_family(3, {{1}, {1, 2}}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(minimal_keys_oracle(circular_cnf(*r.witness)), ht::numbered_family(3, {{1}}));
}

TEST(RealizeKeys, StalledSetIsReported) {
  int no = 0;
  for (const auto& keys : ht::all_sperner_families(3)) {
    auto r = realize_keys(keys);
    if (r) continue;
    ++no;
    ASSERT_TRUE(r.stalled);
    EXPECT_NE(*r.stalled, keys.ground().all());
  }
  EXPECT_GT(no, 0);
}

TEST(RealizeKeys, AgreesWithDefinitionalOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& keys : ht::all_sperner_families(n)) {
      auto r = realize_keys(keys);
      ASSERT_EQ(r.realizable(), ht::brute::keys_realizable(keys)) << "n=" << n;
      if (r) {
        EXPECT_EQ(minimal_keys_oracle(circular_cnf(*r.witness)), keys);
        EXPECT_LE(r.witness->size(), n * keys.size());
      }
    }
  }
}

TEST(RealizeKeys, MaximalTrueSetsAreBasesOfKeys) {
  ht::Rng rng(52);
  for (int round = 0; round < 100; ++round) {
    auto phi = ht::random_mixed_cnf(rng, ht::uniform(rng, 1, 6));
    auto keys = minimal_keys_oracle(phi);
    EXPECT_EQ(keys, Hypergraph(phi.ground(), ht::brute::minimal_keys(phi)));
    EXPECT_EQ(max_nontrivial_true_sets_oracle(phi), complement_family(minimal_transversals(keys)));
  }
}
