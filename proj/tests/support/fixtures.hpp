#pragma once

// Worked instances used across the suites.

#include <initializer_list>
#include <string>
#include <vector>

#include "hhorn/hhorn.hpp"
#include "printers.hpp"

namespace hhorn::testing {

/// Set of numbered variables over GroundSet::numbered(n): k means index k-1.
inline VarSet nums(std::initializer_list<int> members) {
  VarSet s;
  for (int k : members) s.insert(k - 1);
  return s;
}

inline Hypergraph numbered_family(std::size_t n, std::initializer_list<std::initializer_list<int>> edges) {
  std::vector<VarSet> out;
  for (auto e : edges) out.push_back(nums(e));
  return Hypergraph(GroundSet::numbered(n), std::move(out));
}

/// Eight variables; H holds H1..H5 and H' holds H1..H4, H6, H7.
struct CoverFamilies {
  GroundSet ground = GroundSet::numbered(8);
  VarSet h1 = nums({1, 2, 5});
  VarSet h2 = nums({4, 5, 6});
  VarSet h3 = nums({3, 4, 7});
  VarSet h4 = nums({2, 7, 8});
  VarSet h5 = nums({1, 2, 3, 4});
  VarSet h6 = nums({1, 2, 3, 5, 6});
  VarSet h7 = nums({1, 3, 4, 7, 8});

  Hypergraph h() const { return Hypergraph(ground, {h1, h2, h3, h4, h5}); }
  Hypergraph h_prime() const { return Hypergraph(ground, {h1, h2, h3, h4, h6, h7}); }
};

/// Five variables; a self implicate-dual family that is its own set of
/// implicate sets.
inline Hypergraph self_dual_five() {
  return numbered_family(5, {{}, {1, 2, 3}, {4, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5},
                             {1, 2, 3, 4, 5}});
}

/// Ground {1..n, 1'..n'}; edges {i, i'} for each i and {1, ..., n}.
struct PairedGround {
  explicit PairedGround(std::size_t n) : n(n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i) + "'");
    ground = GroundSet(names);
  }

  Var plain(std::size_t i) const { return static_cast<Var>(i - 1); }
  Var primed(std::size_t i) const { return static_cast<Var>(n + i - 1); }

  Hypergraph h() const {
    std::vector<VarSet> edges;
    VarSet top;
    for (std::size_t i = 1; i <= n; ++i) {
      edges.push_back(VarSet{plain(i), primed(i)});
      top.insert(plain(i));
    }
    edges.push_back(top);
    return Hypergraph(ground, edges);
  }

  /// The closed form: union closure of the edges together with every set
  /// meeting each pair {i, i'}.
  Hypergraph closed_form() const {
    std::vector<VarSet> gens = h().edges();
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t m = 0; m < count; ++m) {
      const VarSet z = VarSet::from_index(m);
      bool meets_all = true;
      for (std::size_t i = 1; i <= n; ++i) {
        if (!z.contains(plain(i)) && !z.contains(primed(i))) meets_all = false;
      }
      if (meets_all) gens.push_back(z);
    }
    return union_closure(Hypergraph(ground, gens));
  }

  std::size_t n;
  GroundSet ground;
};

/// Equivalence classes {1,2,3} and {4,5}.
inline Hypergraph equivalence_family() { return numbered_family(5, {{1, 2}, {2, 3}, {4, 5}}); }

/// Keys {a, b} with a in {1,2,3} and b in {4,5}.
inline Hypergraph bipartite_keys() {
  return numbered_family(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

}  // namespace hhorn::testing
