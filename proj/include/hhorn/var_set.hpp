#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hhorn/error.hpp"

#ifndef HHORN_MAX_VARS
#define HHORN_MAX_VARS 64
#endif

namespace hhorn {

/// Upper bound on the size of a ground set, fixed at compile time.
inline constexpr std::size_t max_vars = HHORN_MAX_VARS;
static_assert(max_vars > 0, "HHORN_MAX_VARS must be positive");

/// Position of a variable inside its ground set.
using Var = int;

/// Fixed-width bitmask over variable positions.
///
/// Bit i stands for the i-th variable of the owning GroundSet.  Ordering is
/// by numeric value of the mask (most significant word first), which is the
/// canonical edge order used for every hypergraph this library produces.
template <std::size_t Words>
class BasicVarSet {
 public:
  static constexpr std::size_t word_count = Words;
  static constexpr std::size_t capacity = Words * 64;

  constexpr BasicVarSet() = default;

  BasicVarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) insert(v);
  }

  static BasicVarSet singleton(Var v) {
    BasicVarSet s;
    s.insert(v);
    return s;
  }

  /// The set {0, ..., n-1}.
  static BasicVarSet full(std::size_t n) {
    BasicVarSet s;
    for (std::size_t w = 0; w < Words; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  /// Set whose low bits are taken from a truth-table index.
  static BasicVarSet from_index(std::uint64_t index) {
    BasicVarSet s;
    s.words_[0] = index;
    return s;
  }

  /// Inverse of from_index; only meaningful for sets inside the first word.
  std::uint64_t to_index() const { return words_[0]; }

  bool contains(Var v) const {
    return (words_[word(v)] >> bit(v)) & 1U;
  }
  void insert(Var v) { words_[word(v)] |= mask(v); }
  void erase(Var v) { words_[word(v)] &= ~mask(v); }

  BasicVarSet with(Var v) const {
    BasicVarSet s = *this;
    s.insert(v);
    return s;
  }
  BasicVarSet without(Var v) const {
    BasicVarSet s = *this;
    s.erase(v);
    return s;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Lowest member, or -1 when empty.
  Var first() const {
    for (std::size_t w = 0; w < Words; ++w) {
      if (words_[w] != 0) {
        return static_cast<Var>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
      }
    }
    return -1;
  }

  bool subset_of(const BasicVarSet& o) const {
    for (std::size_t w = 0; w < Words; ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }

  bool intersects(const BasicVarSet& o) const {
    for (std::size_t w = 0; w < Words; ++w) {
      if ((words_[w] & o.words_[w]) != 0) return true;
    }
    return false;
  }

  /// |*this \ o|, stopping early once it exceeds `limit`.
  std::size_t count_outside(const BasicVarSet& o, std::size_t limit = capacity) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < Words; ++w) {
      c += static_cast<std::size_t>(std::popcount(words_[w] & ~o.words_[w]));
      if (c > limit) return c;
    }
    return c;
  }

  BasicVarSet& operator|=(const BasicVarSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  BasicVarSet& operator&=(const BasicVarSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BasicVarSet& operator-=(const BasicVarSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend BasicVarSet operator|(BasicVarSet a, const BasicVarSet& b) { return a |= b; }
  friend BasicVarSet operator&(BasicVarSet a, const BasicVarSet& b) { return a &= b; }
  friend BasicVarSet operator-(BasicVarSet a, const BasicVarSet& b) { return a -= b; }

  friend bool operator==(const BasicVarSet&, const BasicVarSet&) = default;

  friend std::strong_ordering operator<=>(const BasicVarSet& a, const BasicVarSet& b) {
    for (std::size_t w = Words; w-- > 0;) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(w);
    return h;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Var;
    using difference_type = std::ptrdiff_t;
    using pointer = const Var*;
    using reference = Var;

    iterator() = default;
    iterator(const BasicVarSet* set, std::size_t word) : set_(set), word_(word) {
      if (set_ != nullptr && word_ < Words) {
        rest_ = set_->words_[word_];
        settle();
      }
    }

    Var operator*() const {
      return static_cast<Var>(word_ * 64 + static_cast<std::size_t>(std::countr_zero(rest_)));
    }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.word_ == b.word_ && a.rest_ == b.rest_;
    }

   private:
    void settle() {
      while (rest_ == 0 && ++word_ < Words) rest_ = set_->words_[word_];
      if (word_ >= Words) {
        word_ = Words;
        rest_ = 0;
      }
    }

    const BasicVarSet* set_ = nullptr;
    std::size_t word_ = Words;
    std::uint64_t rest_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, Words); }

 private:
  static std::size_t word(Var v) { return static_cast<std::size_t>(v) / 64; }
  static unsigned bit(Var v) { return static_cast<unsigned>(v) % 64; }
  static std::uint64_t mask(Var v) { return std::uint64_t{1} << bit(v); }

  std::array<std::uint64_t, Words> words_{};
};

using VarSet = BasicVarSet<(max_vars + 63) / 64>;

struct VarSetHash {
  std::size_t operator()(const VarSet& s) const { return s.hash(); }
};

/// Ordered list of distinct variable names.
///
/// Copies share the name table, so passing ground sets around by value is
/// cheap.  Two ground sets are equal when they list the same names in the
/// same order.
class GroundSet {
 public:
  GroundSet() : GroundSet(std::vector<std::string>{}) {}

  explicit GroundSet(std::vector<std::string> names) {
    auto table = std::make_shared<Table>();
    if (names.size() > max_vars) {
      throw GroundTooLarge("ground set has " + std::to_string(names.size()) +
                           " variables, limit is " + std::to_string(max_vars));
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw ParseError("empty variable name");
      if (!table->index.emplace(names[i], static_cast<Var>(i)).second) {
        throw ParseError("duplicate variable '" + names[i] + "'");
      }
    }
    table->names = std::move(names);
    table_ = std::move(table);
  }

  /// Ground set {1, ..., n} named by decimal numbers.
  static GroundSet numbered(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return GroundSet(std::move(names));
  }

  std::size_t size() const { return table_->names.size(); }
  const std::vector<std::string>& names() const { return table_->names; }
  const std::string& name(Var v) const { return table_->names.at(static_cast<std::size_t>(v)); }

  VarSet all() const { return VarSet::full(size()); }

  bool has(std::string_view name) const {
    return table_->index.find(std::string(name)) != table_->index.end();
  }

  Var index_of(std::string_view name) const {
    auto it = table_->index.find(std::string(name));
    if (it == table_->index.end()) {
      throw ParseError("unknown variable '" + std::string(name) + "'");
    }
    return it->second;
  }

  VarSet set_of(const std::vector<std::string>& names) const {
    VarSet s;
    for (const auto& n : names) s.insert(index_of(n));
    return s;
  }

  bool contains(const VarSet& s) const { return s.subset_of(all()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.table_ == b.table_ || a.table_->names == b.table_->names;
  }

 private:
  struct Table {
    std::vector<std::string> names;
    std::unordered_map<std::string, Var> index;
  };
  std::shared_ptr<const Table> table_;
};

}  // namespace hhorn
