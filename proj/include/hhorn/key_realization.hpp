#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hhorn/error.hpp"
#include "hhorn/horn_cnf.hpp"
#include "hhorn/hypergraph.hpp"
#include "hhorn/oracle.hpp"

namespace hhorn {

struct KeyRealizationResult {
  /// Hypergraph whose circular function has exactly the requested minimal
  /// keys, present on a yes.
  std::optional<Hypergraph> witness;
  /// On a no: the closure that stopped growing before reaching the ground set.
  std::optional<VarSet> stalled;
  /// Non-fatal notes about the input, such as Sperner reduction.
  std::vector<std::string> warnings;

  bool realizable() const { return witness.has_value(); }
  explicit operator bool() const { return realizable(); }
};

namespace detail {

inline void require_sperner(const Hypergraph& keys) {
  if (!is_sperner(keys)) throw NonSperner();
}

/// Whether some key lies inside `w`.
inline bool in_upset(const std::vector<VarSet>& keys, const VarSet& w) {
  for (const auto& k : keys) {
    if (k.subset_of(w)) return true;
  }
  return false;
}

/// One pruning round: u survives if (S | K) - u still contains a key for
/// every key K holding u.
inline VarSet p_step(const std::vector<VarSet>& keys, const VarSet& s) {
  VarSet kept;
  for (Var u : s) {
    bool ok = true;
    for (const auto& k : keys) {
      if (k.contains(u) && !in_upset(keys, (s | k).without(u))) {
        ok = false;
        break;
      }
    }
    if (ok) kept.insert(u);
  }
  return kept;
}

}  // namespace detail

/// Whether adding the circular clauses of `i` keeps every maximal non-key
/// set true.  Tested key by key: each u in K & I needs a key inside
/// (K | I) - u.
inline bool is_potential_implicate_set(const Hypergraph& keys, const VarSet& i) {
  detail::require_sperner(keys);
  for (const auto& k : keys) {
    for (Var u : k & i) {
      if (!detail::in_upset(keys.edges(), (k | i).without(u))) return false;
    }
  }
  return true;
}

/// Largest potential implicate set inside `s`.
///
/// Variables that occur in no key never get pruned, so they are set aside
/// and added back at the end.
inline VarSet p_closure(const Hypergraph& keys, const VarSet& s) {
  detail::require_sperner(keys);
  VarSet covered;
  for (const auto& k : keys) covered |= k;
  const VarSet loose = s - covered;
  VarSet current = s & covered;
  while (true) {
    VarSet next = detail::p_step(keys.edges(), current);
    if (next == current) return current | loose;
    current = next;
  }
}

/// Decides whether `keys` is the family of minimal keys of some hypergraph
/// Horn function, building one when it is.
///
/// Every key J is driven to the full ground set: T is the closure of J under
/// the hypergraph built so far, and each v outside T whose potential closure
/// of T + v still contains v adds that set as an edge.  A closure that stops
/// growing short of V means no.  A non-Sperner input is reduced first and
/// noted in the warnings.  The empty family is never a key family, since the
/// ground set is always a key.
inline KeyRealizationResult realize_keys(const Hypergraph& input) {
  KeyRealizationResult result;
  Hypergraph keys = input;
  if (!is_sperner(keys)) {
    keys = sperner_reduce(keys);
    result.warnings.push_back("input key family was not Sperner; kept its minimal sets");
  }
  const VarSet all = keys.ground().all();
  if (keys.empty()) {
    result.stalled = VarSet{};
    result.warnings.push_back("empty key family: every function has the ground set as a key");
    return result;
  }

  std::vector<VarSet> edges;
  std::unordered_set<VarSet, VarSetHash> seen;
  for (const auto& j : keys) {
    VarSet t = circular_closure(edges, j);
    while (t != all) {
      for (Var v : all - t) {
        VarSet grown = p_closure(keys, t.with(v));
        if (grown.contains(v) && seen.insert(grown).second) edges.push_back(grown);
      }
      VarSet next = circular_closure(edges, t);
      if (next == t) {
        result.stalled = t;
        return result;
      }
      t = next;
    }
  }
  result.witness = Hypergraph(keys.ground(), std::move(edges));
  return result;
}

/// Minimal keys of `phi`, by exhaustive search over its truth table.
inline Hypergraph minimal_keys_oracle(const HornCnf& phi) {
  return oracle::minimal_keys_of(oracle::table_of(phi));
}

/// Maximal true sets of `phi` other than the ground set, by exhaustive search.
inline Hypergraph max_nontrivial_true_sets_oracle(const HornCnf& phi) {
  return oracle::max_nontrivial_true_sets_of(oracle::table_of(phi));
}

}  // namespace hhorn
