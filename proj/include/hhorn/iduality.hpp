#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "hhorn/error.hpp"
#include "hhorn/horn_cnf.hpp"
#include "hhorn/hypergraph.hpp"
#include "hhorn/implicate.hpp"
#include "hhorn/oracle.hpp"

namespace hhorn {

/// Two implicate sets meeting in exactly one variable.
struct PairWitness {
  VarSet first;
  VarSet second;
};

/// A non-implicate set meeting no implicate set in exactly one variable.
struct GapWitness {
  VarSet set;
};

/// Certificate that a function differs from its implicate-dual.
using SelfDualWitness = std::variant<PairWitness, GapWitness>;

struct GeqIdualResult {
  /// A false set of psi whose complement is an implicate set of gamma.
  std::optional<VarSet> counterexample;
  /// Index of the clause of psi that exposed it.
  std::optional<std::size_t> clause;

  bool holds() const { return !counterexample.has_value(); }
  explicit operator bool() const { return holds(); }
};

/// Decides psi >= gamma^i.
///
/// It fails exactly when gamma has an implicate set containing the head of
/// some clause of psi and avoiding its body; the complement of the largest
/// such set is then a false set of psi that gamma^i accepts.  Clauses are
/// tried in order and the first failure is reported.
inline GeqIdualResult check_geq_idual(const HornCnf& psi, const HornCnf& gamma) {
  if (!(psi.ground() == gamma.ground())) throw GroundMismatch();
  const VarSet all = psi.ground().all();
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    const auto& c = psi.clauses()[idx];
    const VarSet largest = core(gamma, all - c.body);
    if (largest.contains(c.head)) return {all - largest, idx};
  }
  return {};
}

/// Checks a witness against `psi` in polynomial time.
///
/// A gap witness S is confirmed with one core computation per v in S: any
/// implicate set meeting S only in v lies inside (V \ S) + v, so its core
/// contains v exactly when such a set exists.
inline bool verify_self_dual_witness(const HornCnf& psi, const SelfDualWitness& w) {
  const GroundSet& g = psi.ground();
  if (const auto* pair = std::get_if<PairWitness>(&w)) {
    if (!g.contains(pair->first) || !g.contains(pair->second)) {
      throw MalformedWitness("witness set lies outside the ground set");
    }
    return (pair->first & pair->second).size() == 1 && is_implicate_set(psi, pair->first) &&
           is_implicate_set(psi, pair->second);
  }
  const auto& gap = std::get<GapWitness>(w);
  if (!g.contains(gap.set)) throw MalformedWitness("witness set lies outside the ground set");
  if (is_implicate_set(psi, gap.set)) return false;
  const VarSet outside = g.all() - gap.set;
  for (Var v : gap.set) {
    if (core(psi, outside.with(v)).contains(v)) return false;
  }
  return true;
}

struct ConditionAResult {
  /// Two edges (possibly the same one) meeting in exactly one variable.
  std::optional<std::pair<VarSet, VarSet>> violation;

  bool holds() const { return !violation.has_value(); }
  explicit operator bool() const { return holds(); }
};

/// Whether no two edges, an edge with itself included, share exactly one
/// variable.  For the circular function of `h` this is equivalent to
/// dominating its own implicate-dual.
inline ConditionAResult check_condition_a(const Hypergraph& h) {
  const auto& e = h.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i; j < e.size(); ++j) {
      if ((e[i] & e[j]).size() == 1) return {std::make_pair(e[i], e[j])};
    }
  }
  return {};
}

inline oracle::TruthTable idual_oracle(const oracle::TruthTable& f) { return oracle::idual(f); }

inline oracle::TruthTable horn_majorant_oracle(const oracle::TruthTable& f) {
  return oracle::horn_majorant(f);
}

}  // namespace hhorn
