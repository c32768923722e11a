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

// Truth conditions under the opt, max and Lewis (exists-forall) rules for
// dyadic obligation, validity in a model, and validity on a frame.
//
// Box is the universal modality over W, and deontic formulas do not depend
// on the world of evaluation, so the truth set of [].. or O(../..) is
// always either empty or W.

#ifndef DDL_SEMANTICS_HPP_
#define DDL_SEMANTICS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddl/formula.hpp"
#include "ddl/model.hpp"

namespace ddl {

enum class EvalRule : std::uint8_t { kOpt, kMax, kLewis };

inline constexpr std::array<EvalRule, 3> kAllRules = {
    EvalRule::kOpt, EvalRule::kMax, EvalRule::kLewis};

// "opt", "max", "lewis".
std::string_view ruleName(EvalRule rule);
// Throws std::invalid_argument for unknown names.
EvalRule parseRule(std::string_view name);

// Metavariable name (without '?') to world set.
using Assignment = std::map<std::string, WorldSet, std::less<>>;

// What to do with an atom that has no valuation entry.
enum class AtomPolicy : std::uint8_t {
  kEmpty,   // denotes the empty set
  kStrict,  // throws EvalError
};

// Per-frame tables shared by every evaluation on the same relation.
class FrameView {
 public:
  explicit FrameView(const Relation& betterness);

  int size() const { return n_; }
  WorldSet universe() const { return universe_; }
  // {b : a >= b}
  WorldSet dominatedBy(int a) const { return below_[a]; }
  // {c : c >= b}
  WorldSet atLeastAsGood(int b) const { return above_[b]; }
  // {c : c > a}
  WorldSet strictlyBetter(int a) const { return strictAbove_[a]; }

 private:
  int n_;
  WorldSet universe_;
  std::array<WorldSet, kMaxWorlds> below_{};
  std::array<WorldSet, kMaxWorlds> above_{};
  std::array<WorldSet, kMaxWorlds> strictAbove_{};
};

// opt(X) = {a in X : a >= b for all b in X}
// max(X) = {a in X : no b in X with b > a}
// Throws std::invalid_argument for the Lewis rule.
WorldSet bestSet(EvalRule rule, WorldSet x, const FrameView& frame);
WorldSet bestSet(EvalRule rule, WorldSet x, const PreferenceModel& m);

// Whether O(Y/X) holds. Opt/Max: best(X) is a subset of Y. Lewis: X is
// empty, or some b in X&Y has every c >= b inside (W-X)|Y.
bool condHolds(EvalRule rule, WorldSet y, WorldSet x, const FrameView& frame);
bool condHolds(EvalRule rule, WorldSet y, WorldSet x, const PreferenceModel& m);

// Set of worlds where f is true. Every metavariable of f must be bound in
// `assignment`; throws EvalError otherwise.
WorldSet truthSet(const Formula& f, const PreferenceModel& m,
                  const Assignment& assignment, EvalRule rule,
                  AtomPolicy policy = AtomPolicy::kEmpty);

// truthSet(f) == W. Throws EvalError if f contains a metavariable.
bool validInModel(const Formula& f, const PreferenceModel& m, EvalRule rule,
                  AtomPolicy policy = AtomPolicy::kEmpty);

// Valid in every model on `frame`: every assignment of subsets of W to the
// schema's metavariables makes it true at every world. Throws EvalError if
// the schema contains an ordinary atom.
bool validOnFrame(const Formula& schema, const Relation& frame, EvalRule rule);

// The lowest falsifying assignment, enumerating metavariables in name
// order with the first name most significant and each set by ascending
// mask.
std::optional<Assignment> falsifyingAssignment(const Formula& schema,
                                               const Relation& frame,
                                               EvalRule rule);

// Flattened postfix form of a formula for tight search loops. Atoms and
// metavariables are resolved to slots at compile time.
class CompiledFormula {
 public:
  // `slots` lists symbol keys: an atom "p" is keyed "p", a metavariable ?x
  // is keyed "?x". Throws EvalError if f mentions a symbol not in `slots`.
  CompiledFormula(const Formula& f, std::span<const std::string> slots);

  WorldSet evaluate(const FrameView& frame, std::span<const WorldSet> values,
                    EvalRule rule) const;

  // Highest slot index the formula reads, or -1 if none.
  int maxSlot() const { return maxSlot_; }

 private:
  enum class Op : std::uint8_t {
    kSlot,
    kTop,
    kBot,
    kNot,
    kOr,
    kAnd,
    kImplies,
    kIff,
    kBox,
    kDiamond,
    kOblig,
    kPerm,
    kPrefGeq,
    kPrefGt,
  };
  struct Instr {
    Op op;
    std::uint8_t slot;
  };

  void emit(const Formula& f, std::span<const std::string> slots);

  std::vector<Instr> code_;
  int maxSlot_ = -1;
  int stackDepth_ = 0;
};

// Slot key of a symbol: "p" for atoms, "?x" for metavariables.
std::string slotKey(const Formula& symbol);

}  // namespace ddl

#endif  // DDL_SEMANTICS_HPP_
