#pragma once

#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hhorn/horn_cnf.hpp"
#include "hhorn/hypergraph.hpp"
#include "hhorn/implicate.hpp"
#include "hhorn/oracle.hpp"

namespace hhorn {

struct RecognitionResult {
  /// Circular representation of the input function, present on a yes.
  std::optional<Hypergraph> witness;
  /// On a no: a false set F of the input such that no implicate set I has
  /// |I \ F| = 1.
  std::optional<VarSet> certificate;

  bool hypergraph_horn() const { return witness.has_value(); }
  explicit operator bool() const { return hypergraph_horn(); }
};

/// Decides whether `psi` is equivalent to some circular CNF.
///
/// Clauses are processed in input order.  While the current hypergraph does
/// not yet derive a clause A -> v, T is the hypergraph closure of A; every
/// u outside T whose core(psi, T + u) contains u contributes that core as a
/// new edge.  Each such edge makes u derivable, so T strictly grows, unless
/// no u qualifies, in which case T is a false set that no implicate set
/// misses by exactly one element and the answer is no.
inline RecognitionResult recognize(const HornCnf& psi) {
  const VarSet all = psi.ground().all();
  std::vector<VarSet> edges;
  std::unordered_set<VarSet, VarSetHash> seen;

  for (const auto& clause : psi.clauses()) {
    VarSet t = circular_closure(edges, clause.body);
    while (!t.contains(clause.head)) {
      for (Var u : all - t) {
        VarSet grown = core(psi, t.with(u));
        if (grown.contains(u) && seen.insert(grown).second) edges.push_back(grown);
      }
      // Edges only accumulate, so the old closure is a valid starting point.
      VarSet next = circular_closure(edges, t);
      if (next == t) return {std::nullopt, t};
      t = next;
    }
  }
  return {Hypergraph(psi.ground(), std::move(edges)), std::nullopt};
}

/// Brute-force decision over the truth table of `psi`.
inline bool is_hypergraph_horn_oracle(const HornCnf& psi) {
  return oracle::is_hypergraph_horn(oracle::table_of(psi));
}

}  // namespace hhorn
