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

// Axiom schemata over the metavariables ?f, ?g, ?h, and the harness that
// checks property => axiom correspondences on bounded frames.

#ifndef DDL_SCHEMAS_HPP_
#define DDL_SCHEMAS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddl/finder.hpp"
#include "ddl/formula.hpp"
#include "ddl/model.hpp"
#include "ddl/relprops.hpp"
#include "ddl/semantics.hpp"

namespace ddl {

struct AxiomSchema {
  std::string name;
  Formula formula;
};

// K, T, Five, COK, Abs, Nec, Ext, Id, Sh, Dstar, CM, DR, Sp, RM, DEX.
const std::vector<AxiomSchema>& axiomRegistry();
// Throws std::invalid_argument for unknown names.
const AxiomSchema& findAxiom(std::string_view name);

// (?f >= ?g) & (?g >= ?h) -> (?f >= ?h)
AxiomSchema preferenceTransitivity();

// The class of frames a check ranges over: every listed property holds and
// every background axiom is frame-valid.
struct FrameClass {
  PropertySet properties;
  std::vector<std::string> background;

  friend bool operator==(const FrameClass&, const FrameClass&) = default;
};

struct FrameCounterexample {
  Relation frame;
  Assignment assignment;
  // The assignment as a valuation of atoms named after the metavariables.
  PreferenceModel asModel() const;
};

struct ForwardResult {
  bool confirmed = false;
  bool timedOut = false;
  std::optional<FrameCounterexample> counterexample;
  std::uint64_t framesChecked = 0;
  int bound = 0;
};

// Confirmed iff every frame of size <= maxN in the class frame-validates
// the axiom; otherwise the smallest counterexample frame with its lowest
// falsifying assignment. maxN <= 5.
ForwardResult forwardCheck(const FrameClass& frames, const AxiomSchema& axiom,
                           EvalRule rule, int maxN,
                           const SearchOptions& options = {});
ForwardResult forwardCheck(PropertySet properties, const AxiomSchema& axiom,
                           EvalRule rule, int maxN,
                           const SearchOptions& options = {});

enum class ConverseLevel : std::uint8_t {
  kFrame,  // the schema is valid on the frame
  kModel,  // the schema's metavariables read as atoms, valid in one model
};

struct ConverseResult {
  bool found = false;
  bool timedOut = false;
  ConverseLevel level = ConverseLevel::kFrame;
  // Frame-level witness, or the model of a model-level witness.
  std::optional<PreferenceModel> witness;
  std::uint64_t checked = 0;
  int bound = 0;
};

// Searches for a frame (or model) that validates the axiom yet lacks the
// property. maxN <= 5.
ConverseResult converseSearch(const AxiomSchema& axiom,
                              RelationProperty property, EvalRule rule,
                              int maxN,
                              ConverseLevel level = ConverseLevel::kFrame,
                              const SearchOptions& options = {});

enum class RowKind : std::uint8_t {
  kCorrespondence,  // property set => axiom, expected confirmed
  kDropped,         // a correspondence row minus one property, expected to
                    // produce a counterexample
  kUnconditional,   // axiom valid on every frame
  kFails,           // axiom expected to have a counterexample
  kNoAxiom,         // property with no corresponding axiom: reports which
                    // registry axioms outside E become valid on the bounded
                    // class
};

struct SweepRow {
  RowKind kind = RowKind::kCorrespondence;
  std::string label;
  FrameClass frames;
  // Empty for kNoAxiom rows.
  std::string axiom;
  ForwardResult result;
  // kNoAxiom rows only.
  std::vector<std::string> addedValidities;

  bool asExpected() const;
};

struct SweepReport {
  EvalRule rule = EvalRule::kMax;
  int maxN = 0;
  std::vector<SweepRow> rows;

  bool allAsExpected() const;
};

// Runs every row of the correspondence table for `rule` (maxN <= 4).
SweepReport tableSweep(EvalRule rule, int maxN,
                       const SearchOptions& options = {});

struct CollapseResult {
  bool confirmed = false;
  bool timedOut = false;
  std::uint64_t framesChecked = 0;
  std::uint64_t pairsChecked = 0;
  int bound = 0;
  struct Counterexample {
    Relation frame;
    WorldSet antecedent;
    WorldSet consequent;
    bool opt = false;
    bool max = false;
    bool lewis = false;
  };
  std::optional<Counterexample> counterexample;
};

// On every frame of size <= maxN in the class, the opt, max and Lewis
// conditionals agree on every pair of world sets.
CollapseResult collapseCheck(int maxN, PropertySet properties,
                             const SearchOptions& options = {});

}  // namespace ddl

#endif  // DDL_SCHEMAS_HPP_
