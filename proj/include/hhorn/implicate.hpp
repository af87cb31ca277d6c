#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hhorn/error.hpp"
#include "hhorn/horn_cnf.hpp"
#include "hhorn/hypergraph.hpp"

namespace hhorn {

/// One peeling round: the members v of s with v in closure(s - v).
inline VarSet core_step(const HornCnf& psi, const VarSet& s) {
  VarSet kept;
  for (Var v : s) {
    if (psi.closure(s.without(v)).contains(v)) kept.insert(v);
  }
  return kept;
}

/// Largest implicate set contained in `s`.
///
/// Repeats core_step until nothing more is peeled off; at most |s| rounds,
/// each costing |s| closures.
inline VarSet core(const HornCnf& psi, const VarSet& s) {
  if (!psi.ground().contains(s)) throw Error("set is not contained in the ground set");
  VarSet current = s;
  while (true) {
    VarSet next = core_step(psi, current);
    if (next == current) return current;
    current = next;
  }
}

/// Whether some implicate set I has include <= I and I disjoint from exclude.
inline bool extension(const HornCnf& psi, const VarSet& include, const VarSet& exclude) {
  if (include.intersects(exclude)) throw OverlappingConstraint();
  return include.subset_of(core(psi, psi.ground().all() - exclude));
}

/// Resumable flashlight search over the implicate sets of a CNF.
///
/// The empty set is produced first.  After that the search walks a binary
/// tree that decides variables in ground order, include branch first, and
/// only ever enters subtrees whose partial assignment passes extension().
/// Each node costs two extension calls, so at most 2|V| calls separate two
/// consecutive results.
class EnumerationCursor {
 public:
  explicit EnumerationCursor(HornCnf psi) : psi_(std::move(psi)) {
    stack_.push_back(Frame{VarSet{}, VarSet{}, 0});
  }

  /// Next implicate set, or nullopt once the search is exhausted.
  std::optional<VarSet> next() {
    if (!emitted_empty_) {
      emitted_empty_ = true;
      return emit(VarSet{});
    }
    const std::size_t n = psi_.ground().size();
    while (!stack_.empty()) {
      Frame frame = stack_.back();
      stack_.pop_back();
      while (frame.depth < n) {
        const Var v = static_cast<Var>(frame.depth);
        Frame take{frame.in.with(v), frame.out, frame.depth + 1};
        Frame skip{frame.in, frame.out.with(v), frame.depth + 1};
        const bool take_ok = check(take);
        const bool skip_ok = check(skip);
        if (take_ok && skip_ok) {
          stack_.push_back(skip);
          frame = take;
        } else if (take_ok) {
          frame = take;
        } else {
          frame = skip;
        }
      }
      // The all-excluded leaf is the empty set, which went out first.
      if (!frame.in.empty()) return emit(frame.in);
    }
    close_gap();
    return std::nullopt;
  }

  bool done() const { return emitted_empty_ && stack_.empty(); }

  std::uint64_t emitted_count() const { return emitted_; }

  /// Total extension() calls so far.
  std::uint64_t oracle_call_count() const { return calls_; }

  /// Largest number of extension() calls spent between two consecutive
  /// results (or between the last result and exhaustion).
  std::uint64_t max_calls_between_emissions() const { return max_gap_; }

  const HornCnf& cnf() const { return psi_; }

 private:
  struct Frame {
    VarSet in;
    VarSet out;
    std::size_t depth = 0;
  };

  bool check(const Frame& f) {
    ++calls_;
    ++gap_;
    return extension(psi_, f.in, f.out);
  }

  VarSet emit(const VarSet& s) {
    close_gap();
    ++emitted_;
    return s;
  }

  void close_gap() {
    max_gap_ = std::max(max_gap_, gap_);
    gap_ = 0;
  }

  HornCnf psi_;
  std::vector<Frame> stack_;
  bool emitted_empty_ = false;
  std::uint64_t emitted_ = 0;
  std::uint64_t calls_ = 0;
  std::uint64_t gap_ = 0;
  std::uint64_t max_gap_ = 0;
};

/// Feeds every implicate set to `sink` until it returns false.
template <typename Sink>
void for_each_implicate_set(const HornCnf& psi, Sink&& sink) {
  EnumerationCursor cursor(psi);
  while (auto s = cursor.next()) {
    if (!sink(*s)) return;
  }
}

/// Implicate sets in enumeration order, truncated to `limit` when given.
inline std::vector<VarSet> enumerate_implicate_sets(const HornCnf& psi,
                                                    std::optional<std::size_t> limit = {}) {
  std::vector<VarSet> out;
  if (limit && *limit == 0) return out;
  for_each_implicate_set(psi, [&](const VarSet& s) {
    out.push_back(s);
    return !limit || out.size() < *limit;
  });
  return out;
}

/// Nonempty implicate sets that are not the union of the implicate sets
/// strictly inside them.  Enumerates every implicate set, so this is
/// exponential in general.
inline Hypergraph standard_generator(const HornCnf& psi) {
  const auto all = enumerate_implicate_sets(psi);
  std::vector<VarSet> gen;
  for (const auto& i : all) {
    if (i.empty()) continue;
    VarSet covered;
    for (const auto& j : all) {
      if (j != i && j.subset_of(i)) covered |= j;
    }
    if (covered != i) gen.push_back(i);
  }
  return Hypergraph(psi.ground(), std::move(gen));
}

}  // namespace hhorn
