#pragma once

// Exponential-time ground truth over explicit truth tables.
//
// Nothing here calls into forward chaining or the core operator: functions
// are evaluated point by point and every family is found by scanning all
// subsets.  The only bridge to the CNF world is table_of(), which evaluates
// clauses directly.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hhorn/error.hpp"
#include "hhorn/horn_cnf.hpp"
#include "hhorn/hypergraph.hpp"
#include "hhorn/var_set.hpp"

namespace hhorn::oracle {

/// Largest ground set a truth table may span.
inline constexpr std::size_t evaluation_cap = 20;
/// Largest ground set for subset-family enumeration.
inline constexpr std::size_t family_cap = 16;
/// Largest ground set for checks that compare families pairwise.
inline constexpr std::size_t pairwise_cap = 12;

inline void require_cap(const GroundSet& g, std::size_t cap, const char* what) {
  if (g.size() > cap) {
    throw GroundTooLarge(std::string(what) + " is limited to " + std::to_string(cap) +
                         " variables, got " + std::to_string(g.size()));
  }
}

/// A Boolean function given by its value at every subset of the ground set.
class TruthTable {
 public:
  TruthTable() : TruthTable(GroundSet{}, false) {}

  TruthTable(GroundSet ground, bool value) : ground_(std::move(ground)) {
    require_cap(ground_, evaluation_cap, "truth table");
    values_.assign(std::size_t{1} << ground_.size(), value ? 1 : 0);
  }

  TruthTable(GroundSet ground, std::vector<std::uint8_t> values) : ground_(std::move(ground)) {
    require_cap(ground_, evaluation_cap, "truth table");
    if (values.size() != (std::size_t{1} << ground_.size())) {
      throw Error("truth table needs 2^n entries");
    }
    for (auto& v : values) v = v ? 1 : 0;
    values_ = std::move(values);
  }

  /// The function whose true sets are exactly the given family.
  static TruthTable from_true_sets(const Hypergraph& sets) {
    TruthTable t(sets.ground(), false);
    for (const auto& s : sets) t.set(s, true);
    return t;
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t entries() const { return values_.size(); }

  bool operator()(const VarSet& s) const { return values_[s.to_index()] != 0; }
  bool at(std::uint64_t index) const { return values_[index] != 0; }
  void set(const VarSet& s, bool v) { values_[s.to_index()] = v ? 1 : 0; }

  Hypergraph true_sets() const { return collect(true); }
  Hypergraph false_sets() const { return collect(false); }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  Hypergraph collect(bool which) const {
    std::vector<VarSet> out;
    for (std::uint64_t m = 0; m < values_.size(); ++m) {
      if ((values_[m] != 0) == which) out.push_back(VarSet::from_index(m));
    }
    return Hypergraph(ground_, std::move(out));
  }

  GroundSet ground_;
  std::vector<std::uint8_t> values_;
};

/// Evaluates every clause at every point.
inline TruthTable table_of(const HornCnf& phi) {
  require_cap(phi.ground(), evaluation_cap, "table_of");
  TruthTable t(phi.ground(), true);
  for (std::uint64_t m = 0; m < t.entries(); ++m) {
    const VarSet x = VarSet::from_index(m);
    for (const auto& c : phi.clauses()) {
      if (c.body.subset_of(x) && !x.contains(c.head)) {
        t.set(x, false);
        break;
      }
    }
  }
  return t;
}

/// True sets closed under intersection and containing the ground set.
inline bool is_definite_horn(const TruthTable& f) {
  const std::uint64_t full = f.entries() - 1;
  if (!f.at(full)) return false;
  std::vector<std::uint64_t> trues;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (f.at(m)) trues.push_back(m);
  }
  for (std::size_t i = 0; i < trues.size(); ++i) {
    for (std::size_t j = i + 1; j < trues.size(); ++j) {
      if (!f.at(trues[i] & trues[j])) return false;
    }
  }
  return true;
}

/// For every subset S, the intersection of all true supersets of S (the
/// ground set when there are none).  For a definite Horn table this is the
/// closure of S.
inline std::vector<VarSet> closure_table(const TruthTable& f) {
  const std::size_t n = f.ground().size();
  const std::uint64_t count = f.entries();
  const std::uint64_t full = count - 1;
  std::vector<std::uint64_t> meet(count);
  for (std::uint64_t m = 0; m < count; ++m) meet[m] = f.at(m) ? m : full;
  for (std::size_t b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t m = 0; m < count; ++m) {
      if (!(m & bit)) meet[m] &= meet[m | bit];
    }
  }
  std::vector<VarSet> out(count);
  for (std::uint64_t m = 0; m < count; ++m) out[m] = VarSet::from_index(meet[m]);
  return out;
}

inline VarSet closure_of(const TruthTable& f, const VarSet& z) {
  VarSet meet = f.ground().all();
  for (std::uint64_t m = 0; m < f.entries(); ++m) {
    const VarSet t = VarSet::from_index(m);
    if (f(t) && z.subset_of(t)) meet &= t;
  }
  return meet;
}

namespace detail {

/// Definition-level scan: I is an implicate set when no true set T has
/// exactly one element of I outside it.
inline Hypergraph implicate_sets_naive(const TruthTable& f) {
  std::vector<VarSet> trues = f.true_sets().edges();
  std::vector<VarSet> out;
  for (std::uint64_t m = 0; m < f.entries(); ++m) {
    const VarSet i = VarSet::from_index(m);
    bool ok = true;
    for (const auto& t : trues) {
      if (i.count_outside(t, 1) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(i);
  }
  return Hypergraph(f.ground(), std::move(out));
}

}  // namespace detail

/// Implicate sets of an arbitrary Boolean function.
///
/// I fails exactly when some u in I and some true T satisfy I - u <= T and
/// u not in T.  For each u a superset sweep marks the sets lying under a
/// true set that avoids u, which keeps the cost at O(n^2 2^n).
inline Hypergraph implicate_sets_of(const TruthTable& f) {
  require_cap(f.ground(), family_cap, "implicate_sets_of");
  const std::size_t n = f.ground().size();
  const std::uint64_t count = f.entries();
  std::vector<std::uint8_t> bad(count, 0);
  std::vector<std::uint8_t> under(count);
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint64_t ubit = std::uint64_t{1} << u;
    for (std::uint64_t m = 0; m < count; ++m) under[m] = (f.at(m) && !(m & ubit)) ? 1 : 0;
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      for (std::uint64_t m = 0; m < count; ++m) {
        if (!(m & bit)) under[m] |= under[m | bit];
      }
    }
    for (std::uint64_t m = 0; m < count; ++m) {
      if ((m & ubit) && under[m & ~ubit]) bad[m] = 1;
    }
  }
  std::vector<VarSet> out;
  for (std::uint64_t m = 0; m < count; ++m) {
    if (!bad[m]) out.push_back(VarSet::from_index(m));
  }
  return Hypergraph(f.ground(), std::move(out));
}

/// Union of the members of `family` that fit inside `s`.
inline VarSet core_of(const Hypergraph& family, const VarSet& s) {
  VarSet u;
  for (const auto& i : family) {
    if (i.subset_of(s)) u |= i;
  }
  return u;
}

/// Members of a union-closed family that are not unions of smaller members.
inline Hypergraph standard_generator_of(const Hypergraph& implicates) {
  std::vector<VarSet> gen;
  for (const auto& i : implicates) {
    if (i.empty()) continue;
    VarSet covered;
    for (const auto& j : implicates) {
      if (j != i && j.subset_of(i)) covered |= j;
    }
    if (covered != i) gen.push_back(i);
  }
  return Hypergraph(implicates.ground(), std::move(gen));
}

/// Inclusion-minimal sets whose only true superset is the ground set.
inline Hypergraph minimal_keys_of(const TruthTable& f) {
  require_cap(f.ground(), family_cap, "minimal_keys_of");
  const std::size_t n = f.ground().size();
  const std::uint64_t count = f.entries();
  const std::uint64_t full = count - 1;
  // blocked[S]: some true T != V contains S.
  std::vector<std::uint8_t> blocked(count);
  for (std::uint64_t m = 0; m < count; ++m) blocked[m] = (f.at(m) && m != full) ? 1 : 0;
  for (std::size_t b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t m = 0; m < count; ++m) {
      if (!(m & bit)) blocked[m] |= blocked[m | bit];
    }
  }
  std::vector<VarSet> out;
  for (std::uint64_t m = 0; m < count; ++m) {
    if (blocked[m]) continue;
    bool minimal = true;
    for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
      if (!blocked[m & ~(rest & (~rest + 1))]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(VarSet::from_index(m));
  }
  return Hypergraph(f.ground(), std::move(out));
}

/// Maximal true sets strictly below the ground set.
inline Hypergraph max_nontrivial_true_sets_of(const TruthTable& f) {
  require_cap(f.ground(), family_cap, "max_nontrivial_true_sets_of");
  const std::uint64_t full = f.entries() - 1;
  std::vector<VarSet> candidates;
  for (std::uint64_t m = 0; m < full; ++m) {
    if (f.at(m)) candidates.push_back(VarSet::from_index(m));
  }
  std::vector<VarSet> out;
  for (const auto& t : candidates) {
    bool maximal = true;
    for (const auto& u : candidates) {
      if (u != t && t.subset_of(u)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(t);
  }
  return Hypergraph(f.ground(), std::move(out));
}

/// The implicate-dual: its true sets are the complements of the implicate
/// sets of f.
inline TruthTable idual(const TruthTable& f) {
  return TruthTable::from_true_sets(complement_family(implicate_sets_of(f)));
}

/// Smallest hypergraph Horn majorant, as the circular CNF of all implicate
/// sets of f.
inline TruthTable horn_majorant(const TruthTable& f) {
  return table_of(circular_cnf(implicate_sets_of(f)));
}

/// Whether every false set F has an implicate set I with |I \ F| = 1,
/// checked against `family` (the implicate sets or a generator of them).
inline bool false_sets_hit_once(const TruthTable& f, const Hypergraph& family) {
  for (std::uint64_t m = 0; m < f.entries(); ++m) {
    if (f.at(m)) continue;
    const VarSet fs = VarSet::from_index(m);
    bool found = false;
    for (const auto& i : family) {
      if (i.count_outside(fs, 1) == 1) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Whether f has a circular CNF representation, decided by scanning every
/// false set for an implicate set that sticks out of it by one element.
inline bool is_hypergraph_horn(const TruthTable& f) {
  require_cap(f.ground(), pairwise_cap, "is_hypergraph_horn");
  return false_sets_hit_once(f, implicate_sets_of(f));
}

/// Per-claim outcome of the six equivalent characterizations of
/// hypergraph Horn functions.
struct CharacterizationReport {
  /// The circular clauses of all implicate sets, evaluated pointwise, give f.
  bool circular_representation = false;
  /// f equals its smallest hypergraph Horn majorant.
  bool majorant_fixpoint = false;
  /// Applying the implicate-dual twice returns f.
  bool double_dual_fixpoint = false;
  /// Every false set has an implicate set sticking out of it by one element.
  bool implicate_hit = false;
  /// Same, restricted to the standard generator.
  bool generator_hit = false;
  /// Exchange condition of the closure operator at every false set.
  bool exchange = false;

  std::array<bool, 6> claims() const {
    return {circular_representation, majorant_fixpoint, double_dual_fixpoint,
            implicate_hit,           generator_hit,     exchange};
  }

  bool all_agree() const {
    const auto c = claims();
    for (bool b : c) {
      if (b != c[0]) return false;
    }
    return true;
  }
};

inline CharacterizationReport check_theorem41(const TruthTable& f) {
  require_cap(f.ground(), pairwise_cap, "check_theorem41");
  if (!is_definite_horn(f)) throw NotDefiniteHorn();

  CharacterizationReport r;
  const Hypergraph implicates = implicate_sets_of(f);

  r.circular_representation = true;
  for (std::uint64_t m = 0; m < f.entries(); ++m) {
    const VarSet t = VarSet::from_index(m);
    bool value = true;
    for (const auto& i : implicates) {
      if (i.count_outside(t, 1) == 1) {
        value = false;
        break;
      }
    }
    if (value != f(t)) {
      r.circular_representation = false;
      break;
    }
  }

  r.majorant_fixpoint = horn_majorant(f) == f;
  r.double_dual_fixpoint = idual(idual(f)) == f;
  r.implicate_hit = false_sets_hit_once(f, implicates);
  r.generator_hit = false_sets_hit_once(f, standard_generator_of(implicates));

  const auto cl = closure_table(f);
  r.exchange = true;
  for (std::uint64_t m = 0; m < f.entries() && r.exchange; ++m) {
    if (f.at(m)) continue;
    const VarSet fs = VarSet::from_index(m);
    bool some_u = false;
    for (Var u : cl[m] - fs) {
      bool every_v = true;
      for (Var v : fs) {
        const VarSet drop = fs.without(v);
        if (!f(drop)) continue;
        if (!cl[drop.with(u).to_index()].contains(v)) {
          every_v = false;
          break;
        }
      }
      if (every_v) {
        some_u = true;
        break;
      }
    }
    r.exchange = some_u;
  }
  return r;
}

}  // namespace hhorn::oracle
