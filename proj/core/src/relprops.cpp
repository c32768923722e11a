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

#include "ddl/relprops.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "ddl/semantics.hpp"

namespace ddl {

namespace {

constexpr std::array<RelationProperty, kNumRelationProperties> kAll = {
    RelationProperty::kReflexive,  RelationProperty::kTotal,
    RelationProperty::kTransitive, RelationProperty::kQuasiTransitive,
    RelationProperty::kAcyclic,    RelationProperty::kSuzumuraConsistent,
    RelationProperty::kFerrers,    RelationProperty::kIntervalOrder,
    RelationProperty::kOptLimited, RelationProperty::kMaxLimited,
    RelationProperty::kOptSmooth,  RelationProperty::kMaxSmooth,
};

constexpr std::array<std::string_view, kNumRelationProperties> kNames = {
    "reflexive",   "total",       "transitive", "quasi-transitive",
    "acyclic",     "suzumura",    "ferrers",    "interval-order",
    "opt-limited", "max-limited", "opt-smooth", "max-smooth",
};

bool isReflexive(const Relation& r) {
  for (int i = 0; i < r.size(); ++i) {
    if (!r.holds(i, i)) return false;
  }
  return true;
}

bool isTotal(const Relation& r) {
  for (int i = 0; i < r.size(); ++i) {
    if ((r.row(i) | r.column(i)) != r.universe()) return false;
  }
  return true;
}

bool isTransitive(const Relation& r) {
  for (int i = 0; i < r.size(); ++i) {
    for (int j : r.row(i)) {
      if (!r.row(j).isSubsetOf(r.row(i))) return false;
    }
  }
  return true;
}

// No a, b with a ->* b in `reach` and b > a.
bool noStrictStepBack(const Relation& reach, const Relation& strict) {
  for (int a = 0; a < reach.size(); ++a) {
    for (int b : reach.row(a)) {
      if (strict.holds(b, a)) return false;
    }
  }
  return true;
}

bool isFerrers(const Relation& r) {
  const auto pairs = r.pairs();
  for (auto [a, b] : pairs) {
    for (auto [c, d] : pairs) {
      if (!r.holds(a, d) && !r.holds(c, b)) return false;
    }
  }
  return true;
}

bool isLimited(EvalRule rule, const Relation& r) {
  const FrameView frame(r);
  const WorldSet::Mask top = r.universe().mask();
  for (WorldSet::Mask x = 1; x <= top; ++x) {
    if (bestSet(rule, WorldSet(x), frame).empty()) return false;
  }
  return true;
}

bool isSmooth(EvalRule rule, const Relation& r) {
  const FrameView frame(r);
  const WorldSet::Mask top = r.universe().mask();
  for (WorldSet::Mask x = 1; x <= top; ++x) {
    const WorldSet set(x);
    const WorldSet best = bestSet(rule, set, frame);
    for (int w : set - best) {
      if ((frame.strictlyBetter(w) & best).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::span<const RelationProperty> allProperties() { return kAll; }

std::string_view propertyName(RelationProperty p) {
  return kNames.at(static_cast<std::size_t>(p));
}

RelationProperty parseProperty(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

PropertySet::PropertySet(std::initializer_list<RelationProperty> props) {
  for (RelationProperty p : props) insert(p);
}

PropertySet PropertySet::parse(std::string_view commaList) {
  PropertySet out;
  std::size_t i = 0;
  while (i < commaList.size()) {
    std::size_t comma = commaList.find(',', i);
    if (comma == std::string_view::npos) comma = commaList.size();
    std::string_view item = commaList.substr(i, comma - i);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.insert(parseProperty(item));
    i = comma + 1;
  }
  return out;
}

std::vector<RelationProperty> PropertySet::members() const {
  std::vector<RelationProperty> out;
  for (RelationProperty p : kAll) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::vector<std::string> PropertySet::names() const {
  std::vector<std::string> out;
  for (RelationProperty p : members()) out.emplace_back(propertyName(p));
  return out;
}

bool checkProperty(RelationProperty p, const Relation& r) {
  switch (p) {
    case RelationProperty::kReflexive:
      return isReflexive(r);
    case RelationProperty::kTotal:
      return isTotal(r);
    case RelationProperty::kTransitive:
      return isTransitive(r);
    case RelationProperty::kQuasiTransitive:
      return isTransitive(strictPart(r));
    case RelationProperty::kAcyclic: {
      const Relation strict = strictPart(r);
      return noStrictStepBack(transitiveClosure(strict), strict);
    }
    case RelationProperty::kSuzumuraConsistent:
      return noStrictStepBack(transitiveClosure(r), strictPart(r));
    case RelationProperty::kFerrers:
      return isFerrers(r);
    case RelationProperty::kIntervalOrder:
      return isTotal(r) && isFerrers(r);
    case RelationProperty::kOptLimited:
      return isLimited(EvalRule::kOpt, r);
    case RelationProperty::kMaxLimited:
      return isLimited(EvalRule::kMax, r);
    case RelationProperty::kOptSmooth:
      return isSmooth(EvalRule::kOpt, r);
    case RelationProperty::kMaxSmooth:
      return isSmooth(EvalRule::kMax, r);
  }
  throw std::logic_error("unhandled property");
}

bool checkProperty(RelationProperty p, const PreferenceModel& m) {
  return checkProperty(p, m.betterness());
}

bool checkAll(PropertySet props, const Relation& betterness) {
  for (RelationProperty p : props.members()) {
    if (!checkProperty(p, betterness)) return false;
  }
  return true;
}

ImplicationResult propertyImplication(PropertySet premises,
                                      RelationProperty conclusion, int n) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument("implication checks need 1 <= n <= 5");
  }
  ImplicationResult result;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Relation rel = Relation::fromCode(n, code);
    if (!checkAll(premises, rel)) continue;
    ++result.relationsChecked;
    if (!checkProperty(conclusion, rel)) {
      result.witness = rel;
      return result;
    }
  }
  result.confirmed = true;
  return result;
}

ImplicationResult propertyImplicationUpTo(PropertySet premises,
                                          RelationProperty conclusion,
                                          int maxN) {
  ImplicationResult total;
  for (int n = 1; n <= maxN; ++n) {
    ImplicationResult step = propertyImplication(premises, conclusion, n);
    total.relationsChecked += step.relationsChecked;
    if (!step.confirmed) {
      total.witness = step.witness;
      return total;
    }
  }
  total.confirmed = true;
  return total;
}

bool LatticeEntry::asExpected() const {
  return kind == Kind::kIndependent ? result.witness.has_value()
                                    : result.confirmed;
}

bool LatticeReport::allAsExpected() const {
  for (const auto& e : entries) {
    if (!e.asExpected()) return false;
  }
  return intervalFromReflexiveFerrers.confirmed &&
         reflexiveFerrersFromInterval.confirmed &&
         totalFromReflexiveFerrers.confirmed;
}

LatticeReport checkLattice(int maxN) {
  using P = RelationProperty;
  constexpr std::array<P, 7> kNodes = {
      P::kReflexive,          P::kTotal,
      P::kTransitive,         P::kQuasiTransitive,
      P::kSuzumuraConsistent, P::kAcyclic,
      P::kIntervalOrder,
  };
  constexpr std::array<std::pair<P, P>, 6> kArrows = {{
      {P::kTransitive, P::kSuzumuraConsistent},
      {P::kSuzumuraConsistent, P::kAcyclic},
      {P::kTransitive, P::kQuasiTransitive},
      {P::kQuasiTransitive, P::kAcyclic},
      {P::kIntervalOrder, P::kQuasiTransitive},
      {P::kTotal, P::kReflexive},
  }};

  auto index = [&](P p) {
    for (std::size_t i = 0; i < kNodes.size(); ++i) {
      if (kNodes[i] == p) return i;
    }
    throw std::logic_error("not a lattice node");
  };
  // implied[i][j]: node i implies node j, closing the arrows together with
  // the definitional facts interval order => reflexive, total.
  std::array<std::array<bool, 7>, 7> implied{};
  std::array<std::array<bool, 7>, 7> arrow{};
  for (auto [a, b] : kArrows) {
    implied[index(a)][index(b)] = arrow[index(a)][index(b)] = true;
  }
  implied[index(P::kIntervalOrder)][index(P::kReflexive)] = true;
  implied[index(P::kIntervalOrder)][index(P::kTotal)] = true;
  for (std::size_t k = 0; k < 7; ++k) {
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) {
        if (implied[i][k] && implied[k][j]) implied[i][j] = true;
      }
    }
  }

  LatticeReport report;
  report.maxN = maxN;
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      if (i == j) continue;
      LatticeEntry e{
          kNodes[i], kNodes[j], LatticeEntry::Kind::kIndependent, {}};
      if (arrow[i][j]) {
        e.kind = LatticeEntry::Kind::kArrow;
      } else if (implied[i][j]) {
        e.kind = LatticeEntry::Kind::kDerived;
      }
      e.result = propertyImplicationUpTo({kNodes[i]}, kNodes[j], maxN);
      report.entries.push_back(std::move(e));
    }
  }
  const PropertySet reflexiveFerrers = {P::kReflexive, P::kFerrers};
  report.intervalFromReflexiveFerrers =
      propertyImplicationUpTo(reflexiveFerrers, P::kIntervalOrder, maxN);
  report.reflexiveFerrersFromInterval =
      propertyImplicationUpTo({P::kIntervalOrder}, P::kReflexive, maxN);
  if (report.reflexiveFerrersFromInterval.confirmed) {
    report.reflexiveFerrersFromInterval =
        propertyImplicationUpTo({P::kIntervalOrder}, P::kFerrers, maxN);
  }
  report.totalFromReflexiveFerrers =
      propertyImplicationUpTo(reflexiveFerrers, P::kTotal, maxN);
  return report;
}

}  // namespace ddl
