// Copyright 2026 The ddlcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite preference models: worlds are the indices 0..n-1 (n <= 16), the
// betterness relation is stored as its weak part (i >= j), and the
// valuation maps atom names to world sets.

#ifndef DDL_MODEL_HPP_
#define DDL_MODEL_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddl {

inline constexpr int kMaxWorlds = 16;

// A subset of {0..15} stored as a bit mask.
class WorldSet {
 public:
  using Mask = std::uint32_t;

  constexpr WorldSet() = default;
  constexpr explicit WorldSet(Mask mask) : mask_(mask) {}

  static constexpr WorldSet universe(int n) {
    return WorldSet((Mask{1} << n) - 1);
  }
  static constexpr WorldSet singleton(int world) {
    return WorldSet(Mask{1} << world);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int world) const { return (mask_ >> world) & 1u; }
  constexpr bool isSubsetOf(WorldSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // Index of the lowest member; the set must be non-empty.
  constexpr int first() const { return std::countr_zero(mask_); }

  constexpr void insert(int world) { mask_ |= Mask{1} << world; }
  constexpr void erase(int world) { mask_ &= ~(Mask{1} << world); }

  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) {
    return WorldSet(a.mask_ & b.mask_);
  }
  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) {
    return WorldSet(a.mask_ | b.mask_);
  }
  // Set difference.
  friend constexpr WorldSet operator-(WorldSet a, WorldSet b) {
    return WorldSet(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(WorldSet a, WorldSet b) = default;
  friend constexpr auto operator<=>(WorldSet a, WorldSet b) = default;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(Iterator a, Iterator b) = default;

   private:
    Mask rest_ = 0;
  };
  constexpr Iterator begin() const { return Iterator(mask_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  Mask mask_ = 0;
};

// "{0,2,3}"
std::string toString(WorldSet s);

// Square boolean matrix over n worlds. holds(i, j) is read "i >= j" when the
// relation is a betterness relation.
class Relation {
 public:
  // Throws std::invalid_argument unless 1 <= n <= kMaxWorlds.
  explicit Relation(int n);

  static Relation fromPairs(int n,
                            const std::vector<std::pair<int, int>>& pairs);
  static Relation identity(int n);
  static Relation full(int n);

  // Enumeration code: bit (i*n + j) is cell (i, j). Only for n <= 8.
  static Relation fromCode(int n, std::uint64_t code);
  std::uint64_t code() const;

  int size() const { return n_; }
  WorldSet universe() const { return WorldSet::universe(n_); }

  bool holds(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool value = true);

  // {j : i R j}
  WorldSet row(int i) const { return WorldSet(rows_[i]); }
  // {i : i R j}
  WorldSet column(int j) const;

  Relation transpose() const;
  bool empty() const;
  std::vector<std::pair<int, int>> pairs() const;

  friend Relation operator&(const Relation& a, const Relation& b);
  friend Relation operator|(const Relation& a, const Relation& b);
  friend bool operator==(const Relation& a, const Relation& b) = default;

 private:
  int n_;
  std::array<std::uint16_t, kMaxWorlds> rows_{};
};

// Elements (i, j) of rel with i, j < n, in row-major order, as "i>=j".
std::string toString(const Relation& rel);

using Valuation = std::map<std::string, WorldSet, std::less<>>;

class PreferenceModel {
 public:
  // Throws std::invalid_argument if a valued set leaves the universe or an
  // atom name is not an identifier.
  explicit PreferenceModel(Relation betterness, Valuation valuation = {});

  int size() const { return betterness_.size(); }
  WorldSet universe() const { return betterness_.universe(); }
  const Relation& betterness() const { return betterness_; }
  const Valuation& valuation() const { return valuation_; }

  std::optional<WorldSet> lookup(std::string_view atom) const;

  friend bool operator==(const PreferenceModel& a,
                         const PreferenceModel& b) = default;

 private:
  Relation betterness_;
  Valuation valuation_;
};

// a > b iff a >= b and not b >= a.
Relation strictPart(const Relation& betterness);
Relation strictPart(const PreferenceModel& m);

// a ~ b iff a >= b and b >= a.
Relation equalGoodness(const Relation& betterness);
Relation equalGoodness(const PreferenceModel& m);

// Least transitive relation containing rel (Warshall over bit rows).
Relation transitiveClosure(const Relation& rel);

// Line-oriented model file:
//
//   worlds <n>
//   rel <i>>=<j> ...
//   val <atom> = {i,j,...}
//
// '#' starts a comment. A bare "val" line carries no assignment. Throws
// ModelFormatError.
PreferenceModel parseModel(std::string_view text);
std::string serializeModel(const PreferenceModel& m);

}  // namespace ddl

#endif  // DDL_MODEL_HPP_
