#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hhorn/error.hpp"
#include "hhorn/var_set.hpp"

namespace hhorn {

/// Family of subsets of a ground set.
///
/// Edges are kept sorted by mask value with duplicates collapsed, so two
/// hypergraphs over the same ground set compare equal exactly when they have
/// the same edges.
class Hypergraph {
 public:
  Hypergraph() = default;

  explicit Hypergraph(GroundSet ground, std::vector<VarSet> edges = {})
      : ground_(std::move(ground)), edges_(std::move(edges)) {
    const VarSet all = ground_.all();
    for (const auto& e : edges_) {
      if (!e.subset_of(all)) throw Error("hyperedge is not contained in the ground set");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<VarSet>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  /// Sum of edge sizes.
  std::size_t length() const {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.size();
    return total;
  }

  bool contains(const VarSet& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  Hypergraph with(const VarSet& e) const {
    auto edges = edges_;
    edges.push_back(e);
    return Hypergraph(ground_, std::move(edges));
  }

  Hypergraph without(const VarSet& e) const {
    auto edges = edges_;
    edges.erase(std::remove(edges.begin(), edges.end(), e), edges.end());
    return Hypergraph(ground_, std::move(edges));
  }

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  GroundSet ground_;
  std::vector<VarSet> edges_;
};

inline bool is_sperner(const Hypergraph& h) {
  const auto& e = h.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i != j && e[i].subset_of(e[j])) return false;
    }
  }
  return true;
}

inline Hypergraph complement_family(const Hypergraph& h) {
  const VarSet all = h.ground().all();
  std::vector<VarSet> out;
  out.reserve(h.size());
  for (const auto& e : h) out.push_back(all - e);
  return Hypergraph(h.ground(), std::move(out));
}

/// Keeps the inclusion-minimal edges.
inline Hypergraph sperner_reduce(const Hypergraph& h) {
  // Sorting by size puts every proper subset ahead of its supersets.
  std::vector<VarSet> by_size = h.edges();
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const VarSet& a, const VarSet& b) { return a.size() < b.size(); });
  std::vector<VarSet> kept;
  for (const auto& e : by_size) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.subset_of(e)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(e);
  }
  return Hypergraph(h.ground(), std::move(kept));
}

namespace detail {

inline Hypergraph transversals_brute_force(const Hypergraph& h) {
  const std::size_t n = h.ground().size();
  if (n > 20) throw GroundTooLarge("brute-force transversals are limited to 20 variables");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint8_t> hits(count, 0);
  for (std::uint64_t m = 0; m < count; ++m) {
    const VarSet t = VarSet::from_index(m);
    bool all = true;
    for (const auto& e : h) {
      if (!t.intersects(e)) {
        all = false;
        break;
      }
    }
    hits[m] = all ? 1 : 0;
  }
  std::vector<VarSet> out;
  for (std::uint64_t m = 0; m < count; ++m) {
    if (!hits[m]) continue;
    bool minimal = true;
    for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
      if (hits[m & ~(rest & (~rest + 1))]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(VarSet::from_index(m));
  }
  return Hypergraph(h.ground(), std::move(out));
}

/// Berge multiplication: fold the edges in one at a time, keeping only
/// minimal partial transversals after each step.
inline Hypergraph transversals_berge(const Hypergraph& h) {
  std::vector<VarSet> current{VarSet{}};
  for (const auto& e : h) {
    std::vector<VarSet> next;
    for (const auto& t : current) {
      if (t.intersects(e)) {
        next.push_back(t);
      } else {
        for (Var v : e) next.push_back(t.with(v));
      }
    }
    current = sperner_reduce(Hypergraph(h.ground(), std::move(next))).edges();
    if (current.empty()) break;
  }
  return Hypergraph(h.ground(), std::move(current));
}

}  // namespace detail

/// All inclusion-minimal transversals.  Returns the empty family when the
/// empty set is an edge, since nothing can meet it.
inline Hypergraph minimal_transversals(const Hypergraph& h) {
  if (h.ground().size() <= 20) return detail::transversals_brute_force(h);
  return detail::transversals_berge(h);
}

/// All unions of subfamilies, the empty union included.
inline Hypergraph union_closure(const Hypergraph& h) {
  std::unordered_set<VarSet, VarSetHash> seen{VarSet{}};
  std::vector<VarSet> members{VarSet{}};
  for (const auto& e : h) {
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < before; ++i) {
      VarSet u = members[i] | e;
      if (seen.insert(u).second) members.push_back(u);
    }
  }
  return Hypergraph(h.ground(), std::move(members));
}

/// All intersections of subfamilies; the empty intersection is the ground set.
inline Hypergraph intersection_closure(const Hypergraph& h) {
  const VarSet all = h.ground().all();
  std::unordered_set<VarSet, VarSetHash> seen{all};
  std::vector<VarSet> members{all};
  for (const auto& e : h) {
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < before; ++i) {
      VarSet x = members[i] & e;
      if (seen.insert(x).second) members.push_back(x);
    }
  }
  return Hypergraph(h.ground(), std::move(members));
}

/// A violation (C1, C2, u) of the matroid circuit exchange axiom.
struct CircuitViolation {
  VarSet first;
  VarSet second;
  Var shared = -1;

  friend bool operator==(const CircuitViolation&, const CircuitViolation&) = default;
};

struct CircuitAxiomResult {
  std::optional<CircuitViolation> violation;

  bool holds() const { return !violation.has_value(); }
  explicit operator bool() const { return holds(); }
};

/// Checks that for distinct C1, C2 and u in both, some circuit fits inside
/// (C1 | C2) - u.  Requires a Sperner family without the empty edge.
inline CircuitAxiomResult check_circuit_axiom(const Hypergraph& c) {
  for (const auto& e : c) {
    if (e.empty()) throw EmptyEdge();
  }
  if (!is_sperner(c)) throw NonSperner();
  const auto& edges = c.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const VarSet both = edges[i] & edges[j];
      const VarSet joined = edges[i] | edges[j];
      for (Var u : both) {
        const VarSet room = joined.without(u);
        const bool found = std::any_of(edges.begin(), edges.end(),
                                       [&](const VarSet& e) { return e.subset_of(room); });
        if (!found) return {CircuitViolation{edges[i], edges[j], u}};
      }
    }
  }
  return {};
}

}  // namespace hhorn
