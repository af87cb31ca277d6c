#pragma once

#include <cstddef>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hhorn/error.hpp"
#include "hhorn/hypergraph.hpp"
#include "hhorn/var_set.hpp"

namespace hhorn {

/// The implication body -> head.  An empty body asserts the head outright.
struct DefiniteClause {
  VarSet body;
  Var head = 0;

  friend bool operator==(const DefiniteClause&, const DefiniteClause&) = default;
};

struct ClauseHash {
  std::size_t operator()(const DefiniteClause& c) const {
    return c.body.hash() * 31 + static_cast<std::size_t>(c.head);
  }
};

/// Conjunction of definite Horn clauses over a ground set.
///
/// Duplicate clauses are dropped on construction; the first occurrence keeps
/// its position.  The object also carries the occurrence lists used by the
/// linear-time forward chaining in closure().
class HornCnf {
 public:
  HornCnf() = default;

  explicit HornCnf(GroundSet ground, const std::vector<DefiniteClause>& clauses = {})
      : ground_(std::move(ground)), occurs_(ground_.size()) {
    const VarSet all = ground_.all();
    std::unordered_set<DefiniteClause, ClauseHash> seen;
    for (const auto& c : clauses) {
      if (c.head < 0 || static_cast<std::size_t>(c.head) >= ground_.size() ||
          !c.body.subset_of(all)) {
        throw Error("clause mentions a variable outside the ground set");
      }
      if (c.body.contains(c.head)) throw HeadInBody();
      if (!seen.insert(c).second) continue;
      const auto index = clauses_.size();
      clauses_.push_back(c);
      body_size_.push_back(static_cast<int>(c.body.size()));
      if (c.body.empty()) {
        facts_.push_back(index);
      } else {
        for (Var v : c.body) occurs_[static_cast<std::size_t>(v)].push_back(index);
      }
    }
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<DefiniteClause>& clauses() const { return clauses_; }

  /// Number of clauses, |Psi|.
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  /// Total literal count, ||Psi||.
  std::size_t length() const {
    std::size_t total = 0;
    for (const auto& c : clauses_) total += c.body.size() + 1;
    return total;
  }

  /// Value of the CNF at the point whose true variables are `z`.
  bool evaluate(const VarSet& z) const {
    for (const auto& c : clauses_) {
      if (c.body.subset_of(z) && !z.contains(c.head)) return false;
    }
    return true;
  }

  /// Smallest true set containing `z`, by counter-based forward chaining.
  VarSet closure(const VarSet& z) const {
    thread_local std::vector<int> pending;
    thread_local std::vector<Var> work;
    pending.assign(body_size_.begin(), body_size_.end());
    work.clear();

    VarSet result = z;
    for (Var v : z) work.push_back(v);
    for (auto i : facts_) {
      const Var h = clauses_[i].head;
      if (!result.contains(h)) {
        result.insert(h);
        work.push_back(h);
      }
    }
    while (!work.empty()) {
      const Var v = work.back();
      work.pop_back();
      for (auto i : occurs_[static_cast<std::size_t>(v)]) {
        if (--pending[i] == 0) {
          const Var h = clauses_[i].head;
          if (!result.contains(h)) {
            result.insert(h);
            work.push_back(h);
          }
        }
      }
    }
    return result;
  }

  /// One round of forward chaining: z plus every head whose body lies in z.
  VarSet forward_step(const VarSet& z) const {
    VarSet next = z;
    for (const auto& c : clauses_) {
      if (c.body.subset_of(z)) next.insert(c.head);
    }
    return next;
  }

  friend bool operator==(const HornCnf& a, const HornCnf& b) {
    return a.ground_ == b.ground_ && a.clauses_ == b.clauses_;
  }

 private:
  GroundSet ground_;
  std::vector<DefiniteClause> clauses_;
  std::vector<int> body_size_;
  std::vector<std::size_t> facts_;
  std::vector<std::vector<std::size_t>> occurs_;
};

inline VarSet closure(const HornCnf& phi, const VarSet& z) { return phi.closure(z); }

/// Whether body -> head follows from phi.
inline bool is_implicate(const HornCnf& phi, const VarSet& body, Var head) {
  if (body.contains(head)) throw HeadInBody();
  return phi.closure(body).contains(head);
}

inline bool is_true_set(const HornCnf& phi, const VarSet& t) { return phi.closure(t) == t; }

inline bool is_key(const HornCnf& phi, const VarSet& k) {
  return phi.closure(k) == phi.ground().all();
}

/// For each edge E and v in E, the clause (E - v) -> v.
inline HornCnf circular_cnf(const Hypergraph& h) {
  std::vector<DefiniteClause> clauses;
  for (const auto& e : h) {
    for (Var v : e) clauses.push_back({e.without(v), v});
  }
  return HornCnf(h.ground(), clauses);
}

/// Closure under the circular CNF of `edges`, without building the CNF:
/// repeatedly adds the lone missing element of any edge that lacks exactly
/// one element.
inline VarSet circular_closure(const std::vector<VarSet>& edges, VarSet z) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      const VarSet missing = e - z;
      if (missing.size() == 1) {
        z |= missing;
        changed = true;
      }
    }
  }
  return z;
}

/// Whether (I - v) -> v follows from phi for every v in I.
inline bool is_implicate_set(const HornCnf& phi, const VarSet& i) {
  for (Var v : i) {
    if (!phi.closure(i.without(v)).contains(v)) return false;
  }
  return true;
}

/// phi <= psi as Boolean functions: every clause of psi is an implicate of phi.
inline bool cnf_implies(const HornCnf& phi, const HornCnf& psi) {
  if (!(phi.ground() == psi.ground())) throw GroundMismatch();
  for (const auto& c : psi.clauses()) {
    if (!phi.closure(c.body).contains(c.head)) return false;
  }
  return true;
}

inline bool cnf_equivalent(const HornCnf& phi, const HornCnf& psi) {
  return cnf_implies(phi, psi) && cnf_implies(psi, phi);
}

/// Conjunction of two CNFs over the same ground set.
inline HornCnf conjoin(const HornCnf& a, const HornCnf& b) {
  if (!(a.ground() == b.ground())) throw GroundMismatch();
  auto clauses = a.clauses();
  clauses.insert(clauses.end(), b.clauses().begin(), b.clauses().end());
  return HornCnf(a.ground(), clauses);
}

/// Greedily drops edges, in canonical order, whose removal leaves the
/// circular function unchanged.  The result has no removable edge.
inline Hypergraph reduce_representation(const Hypergraph& h) {
  const HornCnf target = circular_cnf(h);
  Hypergraph current = h;
  for (const auto& e : h) {
    Hypergraph candidate = current.without(e);
    if (cnf_equivalent(circular_cnf(candidate), target)) current = std::move(candidate);
  }
  return current;
}

}  // namespace hhorn
