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

#include "ddl/schemas.hpp"

#include <stdexcept>

namespace ddl {

namespace {

AxiomSchema schema(std::string name, std::string_view text) {
  return AxiomSchema{std::move(name), parse(text)};
}

}  // namespace

const std::vector<AxiomSchema>& axiomRegistry() {
  static const std::vector<AxiomSchema> kRegistry = {
      // S5 for the universal modality.
      schema("K", "[](?f -> ?g) -> ([]?f -> []?g)"),
      schema("T", "[]?f -> ?f"),
      schema("Five", "<>?f -> []<>?f"),
      // E
      schema("COK", "O(?g -> ?h / ?f) -> (O(?g / ?f) -> O(?h / ?f))"),
      schema("Abs", "O(?g / ?f) -> []O(?g / ?f)"),
      schema("Nec", "[]?f -> O(?f / ?g)"),
      schema("Ext", "[](?f <-> ?g) -> (O(?h / ?f) <-> O(?h / ?g))"),
      schema("Id", "O(?f / ?f)"),
      schema("Sh", "O(?h / ?f & ?g) -> O(?g -> ?h / ?f)"),
      // Extensions
      schema("Dstar", "<>?f -> (O(?g / ?f) -> P(?g / ?f))"),
      schema("CM", "O(?g / ?f) & O(?h / ?f) -> O(?h / ?f & ?g)"),
      schema("DR", "O(?h / ?f | ?g) -> O(?h / ?f) | O(?h / ?g)"),
      schema("Sp", "P(?g / ?f) & O(?g -> ?h / ?f) -> O(?h / ?f & ?g)"),
      schema("RM", "P(?g / ?f) & O(?h / ?f) -> O(?h / ?f & ?g)"),
      schema("DEX", "<>?f & O(?g / ?f) & O(~?g / ?f) -> O(?h / ?f)"),
  };
  return kRegistry;
}

const AxiomSchema& findAxiom(std::string_view name) {
  for (const AxiomSchema& a : axiomRegistry()) {
    if (a.name == name) return a;
  }
  throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

AxiomSchema preferenceTransitivity() {
  return schema("PrefTrans", "(?f >= ?g) & (?g >= ?h) -> (?f >= ?h)");
}

PreferenceModel FrameCounterexample::asModel() const {
  Valuation v;
  for (const auto& [name, set] : assignment) v.emplace(name, set);
  return PreferenceModel(frame, std::move(v));
}

namespace {

void checkBound(int maxN) {
  if (maxN < 1 || maxN > kMaxSearchWorlds) {
    throw std::invalid_argument("bound must be in [1, " +
                                std::to_string(kMaxSearchWorlds) + "]");
  }
}

}  // namespace

ForwardResult forwardCheck(const FrameClass& frames, const AxiomSchema& axiom,
                           EvalRule rule, int maxN,
                           const SearchOptions& options) {
  checkBound(maxN);
  std::vector<Formula> background;
  for (const std::string& name : frames.background) {
    background.push_back(findAxiom(name).formula);
  }
  const Deadline deadline(options.timeout);
  const FrameFilter filter{frames.properties, {}, options.isoReject};

  ForwardResult result;
  result.bound = maxN;
  for (int n = 1; n <= maxN; ++n) {
    auto scan = scanFrames<Assignment>(
        n, filter, options, deadline,
        [&](const Relation& frame,
            std::uint64_t& inClass) -> std::optional<Assignment> {
          for (const Formula& b : background) {
            if (!validOnFrame(b, frame, rule)) return std::nullopt;
          }
          ++inClass;
          return falsifyingAssignment(axiom.formula, frame, rule);
        });
    result.framesChecked += scan.work;
    if (scan.timedOut) {
      result.timedOut = true;
      return result;
    }
    if (scan.frame) {
      result.counterexample =
          FrameCounterexample{*scan.frame, std::move(*scan.payload)};
      return result;
    }
  }
  result.confirmed = true;
  return result;
}

ForwardResult forwardCheck(PropertySet properties, const AxiomSchema& axiom,
                           EvalRule rule, int maxN,
                           const SearchOptions& options) {
  return forwardCheck(FrameClass{properties, {}}, axiom, rule, maxN, options);
}

ConverseResult converseSearch(const AxiomSchema& axiom,
                              RelationProperty property, EvalRule rule,
                              int maxN, ConverseLevel level,
                              const SearchOptions& options) {
  checkBound(maxN);
  ConverseResult result;
  result.level = level;
  result.bound = maxN;

  if (level == ConverseLevel::kModel) {
    SearchSpec spec;
    spec.maxN = maxN;
    spec.excluded.insert(property);
    spec.rule = rule;
    spec.targets = {metavarsToAtoms(axiom.formula)};
    for (const std::string& name : metavars(axiom.formula)) {
      spec.atoms.push_back(name);
    }
    SearchResult found = findSatisfyingModel(spec, options);
    result.found = found.found();
    result.timedOut = found.status == SearchStatus::kTimedOut;
    result.witness = found.model;
    result.checked = found.modelsChecked();
    return result;
  }

  const Deadline deadline(options.timeout);
  const FrameFilter filter{{}, {property}, options.isoReject};
  for (int n = 1; n <= maxN; ++n) {
    auto scan = scanFrames<bool>(
        n, filter, options, deadline,
        [&](const Relation& frame, std::uint64_t&) -> std::optional<bool> {
          if (validOnFrame(axiom.formula, frame, rule)) return true;
          return std::nullopt;
        });
    result.checked += scan.frames;
    if (scan.timedOut) {
      result.timedOut = true;
      return result;
    }
    if (scan.frame) {
      result.found = true;
      result.witness = PreferenceModel(*scan.frame);
      return result;
    }
  }
  return result;
}

bool SweepRow::asExpected() const {
  switch (kind) {
    case RowKind::kCorrespondence:
    case RowKind::kUnconditional:
      return result.confirmed;
    case RowKind::kDropped:
    case RowKind::kFails:
      return result.counterexample.has_value();
    case RowKind::kNoAxiom:
      return !result.timedOut;
  }
  return false;
}

bool SweepReport::allAsExpected() const {
  for (const SweepRow& row : rows) {
    if (!row.asExpected()) return false;
  }
  return true;
}

namespace {

using P = RelationProperty;

struct RowConfig {
  RowKind kind;
  std::string label;
  FrameClass frames;
  std::string axiom;
};

// A correspondence row followed by one dropped-property row per principal
// property. The limitedness background never counts as principal.
void correspondence(std::vector<RowConfig>& rows, const std::string& label,
                    PropertySet principal, PropertySet background,
                    std::vector<std::string> backgroundAxioms,
                    const std::string& axiom) {
  PropertySet all = principal;
  for (P p : background.members()) all.insert(p);
  rows.push_back({RowKind::kCorrespondence, label,
                  FrameClass{all, backgroundAxioms}, axiom});
  for (P p : principal.members()) {
    PropertySet without = all;
    without.erase(p);
    rows.push_back({RowKind::kDropped,
                    label + " without " + std::string(propertyName(p)),
                    FrameClass{without, backgroundAxioms}, axiom});
  }
}

std::vector<RowConfig> sweepRows(EvalRule rule) {
  std::vector<RowConfig> rows;
  const std::vector<std::string> dstar = {"Dstar"};
  auto always = [&](const std::string& axiom) {
    rows.push_back({RowKind::kUnconditional, axiom + " on all frames",
                    FrameClass{}, axiom});
  };
  auto fails = [&](const std::string& label, PropertySet props,
                   const std::string& axiom) {
    rows.push_back({RowKind::kFails, label, FrameClass{props, {}}, axiom});
  };
  auto noAxiom = [&](const std::string& label, PropertySet props) {
    rows.push_back({RowKind::kNoAxiom, label, FrameClass{props, {}}, ""});
  };

  if (rule == EvalRule::kLewis) {
    for (const char* a : {"Abs", "Nec", "Ext", "Id", "Sh", "K", "T", "Five"}) {
      always(a);
    }
    fails("COK on all frames", {}, "COK");
    fails("DEX on all frames", {}, "DEX");
    correspondence(rows, "totality", {P::kTotal}, {}, {}, "Dstar");
    correspondence(rows, "transitivity", {P::kTransitive}, {}, {}, "Sp");
    correspondence(rows, "transitivity + totality", {P::kTransitive, P::kTotal},
                   {}, {}, "COK");
    correspondence(rows, "transitivity + totality", {P::kTransitive, P::kTotal},
                   {}, {}, "CM");
    return rows;
  }

  const bool max = rule == EvalRule::kMax;
  const P limited = max ? P::kMaxLimited : P::kOptLimited;
  const P smooth = max ? P::kMaxSmooth : P::kOptSmooth;
  for (const char* a :
       {"COK", "Abs", "Nec", "Ext", "Id", "Sh", "K", "T", "Five", "DEX"}) {
    always(a);
  }
  correspondence(rows, "limitedness", {limited}, {}, {}, "Dstar");
  correspondence(rows, "smoothness", {smooth}, {limited}, dstar, "CM");
  if (max) {
    correspondence(rows, "transitivity + totality", {P::kTransitive, P::kTotal},
                   {limited}, dstar, "Sp");
    fails("transitivity alone", {P::kTransitive}, "Sp");
  } else {
    correspondence(rows, "transitivity", {P::kTransitive}, {limited}, dstar,
                   "Sp");
  }
  correspondence(rows, "interval order", {P::kIntervalOrder}, {limited}, dstar,
                 "DR");
  noAxiom("reflexivity", {P::kReflexive});
  noAxiom("totality", {P::kTotal});
  if (max) noAxiom("transitivity", {P::kTransitive});
  return rows;
}

}  // namespace

SweepReport tableSweep(EvalRule rule, int maxN, const SearchOptions& options) {
  if (maxN < 1 || maxN > 4) {
    throw std::invalid_argument("table sweeps need 1 <= maxN <= 4");
  }
  SweepReport report;
  report.rule = rule;
  report.maxN = maxN;
  for (RowConfig& cfg : sweepRows(rule)) {
    SweepRow row;
    row.kind = cfg.kind;
    row.label = std::move(cfg.label);
    row.frames = std::move(cfg.frames);
    row.axiom = std::move(cfg.axiom);
    if (row.kind != RowKind::kNoAxiom) {
      row.result =
          forwardCheck(row.frames, findAxiom(row.axiom), rule, maxN, options);
    } else {
      // Bounded stand-in for "adds no validities": which extension axioms
      // hold on the class but not on every frame.
      row.result.bound = maxN;
      for (const char* name : {"Dstar", "CM", "DR", "Sp", "RM"}) {
        const AxiomSchema& axiom = findAxiom(name);
        ForwardResult onClass =
            forwardCheck(row.frames, axiom, rule, maxN, options);
        ForwardResult everywhere =
            forwardCheck(FrameClass{}, axiom, rule, maxN, options);
        row.result.timedOut |= onClass.timedOut || everywhere.timedOut;
        row.result.framesChecked = onClass.framesChecked;
        if (onClass.confirmed && !everywhere.confirmed) {
          row.addedValidities.push_back(name);
        }
      }
      row.result.confirmed = row.addedValidities.empty();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

CollapseResult collapseCheck(int maxN, PropertySet properties,
                             const SearchOptions& options) {
  checkBound(maxN);
  using Counterexample = CollapseResult::Counterexample;
  const Deadline deadline(options.timeout);
  const FrameFilter filter{properties, {}, options.isoReject};
  CollapseResult result;
  result.bound = maxN;
  for (int n = 1; n <= maxN; ++n) {
    auto scan = scanFrames<Counterexample>(
        n, filter, options, deadline,
        [&](const Relation& frame,
            std::uint64_t& pairs) -> std::optional<Counterexample> {
          const FrameView view(frame);
          const WorldSet::Mask last = frame.universe().mask();
          for (WorldSet::Mask x = 0; x <= last; ++x) {
            for (WorldSet::Mask y = 0; y <= last; ++y) {
              ++pairs;
              const bool opt =
                  condHolds(EvalRule::kOpt, WorldSet(y), WorldSet(x), view);
              const bool max =
                  condHolds(EvalRule::kMax, WorldSet(y), WorldSet(x), view);
              const bool lewis =
                  condHolds(EvalRule::kLewis, WorldSet(y), WorldSet(x), view);
              if (opt != max || max != lewis) {
                return Counterexample{frame, WorldSet(x), WorldSet(y),
                                      opt,   max,         lewis};
              }
            }
          }
          return std::nullopt;
        });
    result.framesChecked += scan.frames;
    result.pairsChecked += scan.work;
    if (scan.timedOut) {
      result.timedOut = true;
      return result;
    }
    if (scan.frame) {
      result.counterexample = std::move(scan.payload);
      return result;
    }
  }
  result.confirmed = true;
  return result;
}

}  // namespace ddl
