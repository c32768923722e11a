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

// Decision procedures for the betterness-relation conditions used in
// preference semantics, and bounded exhaustive checking of implications
// between them.

#ifndef DDL_RELPROPS_HPP_
#define DDL_RELPROPS_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddl/model.hpp"

namespace ddl {

enum class RelationProperty : std::uint8_t {
  kReflexive,
  kTotal,
  kTransitive,
  kQuasiTransitive,
  kAcyclic,
  kSuzumuraConsistent,
  kFerrers,
  kIntervalOrder,
  kOptLimited,
  kMaxLimited,
  kOptSmooth,
  kMaxSmooth,
};

inline constexpr int kNumRelationProperties = 12;

// Every property in declaration order.
std::span<const RelationProperty> allProperties();

// Kebab-case names used on the command line and in reports, e.g.
// "quasi-transitive", "max-smooth".
std::string_view propertyName(RelationProperty p);
// Accepts the names above; throws std::invalid_argument otherwise.
RelationProperty parseProperty(std::string_view name);

class PropertySet {
 public:
  constexpr PropertySet() = default;
  PropertySet(std::initializer_list<RelationProperty> props);

  // Parses a comma-separated list; empty text gives the empty set.
  static PropertySet parse(std::string_view commaList);

  bool contains(RelationProperty p) const { return (bits_ >> bit(p)) & 1u; }
  bool empty() const { return bits_ == 0; }
  void insert(RelationProperty p) { bits_ |= 1u << bit(p); }
  void erase(RelationProperty p) { bits_ &= ~(1u << bit(p)); }

  std::vector<RelationProperty> members() const;
  std::vector<std::string> names() const;

  friend bool operator==(PropertySet a, PropertySet b) = default;

 private:
  static constexpr unsigned bit(RelationProperty p) {
    return static_cast<unsigned>(p);
  }
  std::uint16_t bits_ = 0;
};

// Limitedness and smoothness quantify over every non-empty subset of the
// universe. IntervalOrder is decided as totality plus the Ferrers condition.
bool checkProperty(RelationProperty p, const Relation& betterness);
bool checkProperty(RelationProperty p, const PreferenceModel& m);
bool checkAll(PropertySet props, const Relation& betterness);

struct ImplicationResult {
  bool confirmed = false;
  // Lowest-code relation on n worlds with every premise and without the
  // conclusion.
  std::optional<Relation> witness;
  std::uint64_t relationsChecked = 0;
};

// Checks every relation on exactly n worlds (1 <= n <= 5).
ImplicationResult propertyImplication(PropertySet premises,
                                      RelationProperty conclusion, int n);

// Checks sizes 1..maxN in turn and stops at the first witness.
ImplicationResult propertyImplicationUpTo(PropertySet premises,
                                          RelationProperty conclusion,
                                          int maxN);

// The weakenings-of-transitivity lattice over {reflexive, total, transitive,
// quasi-transitive, Suzumura, acyclic, interval order}.
struct LatticeEntry {
  RelationProperty from;
  RelationProperty to;
  enum class Kind { kArrow, kDerived, kIndependent } kind;
  ImplicationResult result;
  // Arrows and derived pairs must be confirmed, independent pairs must
  // produce a witness.
  bool asExpected() const;
};

struct LatticeReport {
  int maxN = 0;
  std::vector<LatticeEntry> entries;
  // interval order <=> reflexive + Ferrers, and reflexive + Ferrers => total.
  ImplicationResult intervalFromReflexiveFerrers;
  ImplicationResult reflexiveFerrersFromInterval;
  ImplicationResult totalFromReflexiveFerrers;
  bool allAsExpected() const;
};

LatticeReport checkLattice(int maxN);

}  // namespace ddl

#endif  // DDL_RELPROPS_HPP_
