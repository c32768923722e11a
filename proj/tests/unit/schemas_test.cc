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

#include <string>
#include <vector>

#include "ddl/relprops.hpp"
#include "gtest/gtest.h"
#include "support/oracle.hpp"

namespace ddl {
namespace {

using P = RelationProperty;

oracle::Rule toOracle(EvalRule r) {
  return r == EvalRule::kOpt   ? oracle::Rule::kOpt
         : r == EvalRule::kMax ? oracle::Rule::kMax
                               : oracle::Rule::kLewis;
}

TEST(RegistryTest, Contents) {
  std::vector<std::string> names;
  for (const AxiomSchema& a : axiomRegistry()) {
    names.push_back(a.name);
    for (const std::string& v : metavars(a.formula)) {
      EXPECT_TRUE(v == "f" || v == "g" || v == "h") << a.name;
    }
    EXPECT_TRUE(atoms(a.formula).empty()) << a.name;
  }
  EXPECT_EQ(names, (std::vector<std::string>{"K", "T", "Five", "COK", "Abs",
                                             "Nec", "Ext", "Id", "Sh", "Dstar",
                                             "CM", "DR", "Sp", "RM", "DEX"}));
  EXPECT_EQ(render(findAxiom("Sp").formula),
            "P(?g / ?f) & O(?g -> ?h / ?f) -> O(?h / ?f & ?g)");
  EXPECT_EQ(render(preferenceTransitivity().formula),
            "(?f >= ?g) & (?g >= ?h) -> (?f >= ?h)");
  EXPECT_THROW(findAxiom("D"), std::invalid_argument);
}

TEST(ForwardCheckTest, SystemEOnEveryFrame) {
  for (const char* name :
       {"K", "T", "Five", "COK", "Abs", "Nec", "Ext", "Id", "Sh"}) {
    for (EvalRule rule : {EvalRule::kOpt, EvalRule::kMax}) {
      const ForwardResult r =
          forwardCheck(PropertySet{}, findAxiom(name), rule, 3);
      EXPECT_TRUE(r.confirmed) << name << " " << ruleName(rule);
      EXPECT_EQ(r.framesChecked, 2u + 16u + 512u);
    }
  }
}

TEST(ForwardCheckTest, Examples) {
  EXPECT_TRUE(
      forwardCheck({P::kMaxLimited}, findAxiom("Dstar"), EvalRule::kMax, 3)
          .confirmed);
  EXPECT_TRUE(forwardCheck({P::kMaxSmooth}, findAxiom("CM"), EvalRule::kMax, 3)
                  .confirmed);

  const AxiomSchema& sp = findAxiom("Sp");
  const ForwardResult r = forwardCheck({P::kTransitive}, sp, EvalRule::kMax, 3);
  ASSERT_FALSE(r.confirmed);
  ASSERT_TRUE(r.counterexample.has_value());
  const PreferenceModel m = r.counterexample->asModel();
  EXPECT_TRUE(checkProperty(P::kTransitive, m));
  EXPECT_FALSE(validInModel(metavarsToAtoms(sp.formula), m, EvalRule::kMax));
  EXPECT_FALSE(oracle::validOnFrame(
      sp.formula, oracle::fromRelation(m.betterness()), oracle::Rule::kMax));
}

TEST(ForwardCheckTest, CounterexampleIsTheSmallestFrame) {
  for (const char* name : {"Dstar", "CM", "DR", "Sp", "RM", "COK", "DEX"}) {
    for (EvalRule rule : kAllRules) {
      const AxiomSchema& axiom = findAxiom(name);
      const ForwardResult r = forwardCheck(PropertySet{}, axiom, rule, 2);
      std::optional<Relation> expected;
      for (int n = 1; n <= 2 && !expected; ++n) {
        for (std::uint64_t code = 0; code < (1u << (n * n)); ++code) {
          const Relation frame = Relation::fromCode(n, code);
          if (!oracle::validOnFrame(axiom.formula, oracle::fromRelation(frame),
                                    toOracle(rule))) {
            expected = frame;
            break;
          }
        }
      }
      ASSERT_EQ(r.confirmed, !expected.has_value()) << name;
      if (expected) {
        ASSERT_EQ(r.counterexample->frame, *expected)
            << name << " " << ruleName(rule);
      }
    }
  }
}

TEST(ForwardCheckTest, BackgroundAxiomsFilterFrames) {
  const FrameClass cls{{P::kMaxLimited}, {"Dstar"}};
  const ForwardResult withBackground =
      forwardCheck(cls, findAxiom("Id"), EvalRule::kMax, 3);
  const ForwardResult plain =
      forwardCheck({P::kMaxLimited}, findAxiom("Id"), EvalRule::kMax, 3);
  EXPECT_TRUE(withBackground.confirmed);
  // D* holds on every max-limited frame, so nothing is filtered out.
  EXPECT_EQ(withBackground.framesChecked, plain.framesChecked);
  const ForwardResult noDstar = forwardCheck(
      FrameClass{{}, {"Dstar"}}, findAxiom("Id"), EvalRule::kOpt, 2);
  const ForwardResult all =
      forwardCheck(PropertySet{}, findAxiom("Id"), EvalRule::kOpt, 2);
  EXPECT_LT(noDstar.framesChecked, all.framesChecked);
  EXPECT_THROW(forwardCheck(FrameClass{{}, {"Nope"}}, findAxiom("Id"),
                            EvalRule::kOpt, 2),
               std::invalid_argument);
}

TEST(ForwardCheckTest, IndependentOfWorkers) {
  SearchOptions many;
  many.workers = 4;
  const ForwardResult a =
      forwardCheck({P::kTransitive}, findAxiom("Sp"), EvalRule::kMax, 3);
  const ForwardResult b =
      forwardCheck({P::kTransitive}, findAxiom("Sp"), EvalRule::kMax, 3, many);
  EXPECT_EQ(a.framesChecked, b.framesChecked);
  EXPECT_EQ(a.counterexample->frame, b.counterexample->frame);
  EXPECT_EQ(a.counterexample->assignment, b.counterexample->assignment);
}

TEST(ForwardCheckTest, PreferenceTransitivity) {
  const AxiomSchema pt = preferenceTransitivity();
  EXPECT_TRUE(forwardCheck({P::kTransitive}, pt, EvalRule::kOpt, 3).confirmed);
  EXPECT_TRUE(forwardCheck({P::kTransitive, P::kTotal}, pt, EvalRule::kMax, 3)
                  .confirmed);
  EXPECT_FALSE(forwardCheck({P::kTransitive}, pt, EvalRule::kMax, 3).confirmed);
}

TEST(ForwardCheckTest, DeonticExplosion) {
  EXPECT_TRUE(forwardCheck(PropertySet{}, findAxiom("DEX"), EvalRule::kMax, 3)
                  .confirmed);
  EXPECT_TRUE(forwardCheck(PropertySet{}, findAxiom("DEX"), EvalRule::kLewis, 3)
                  .counterexample);
}

TEST(ConverseSearchTest, Examples) {
  const ConverseResult id =
      converseSearch(findAxiom("Id"), P::kTransitive, EvalRule::kMax, 3);
  ASSERT_TRUE(id.found);
  EXPECT_FALSE(checkProperty(P::kTransitive, *id.witness));
  EXPECT_TRUE(validOnFrame(findAxiom("Id").formula, id.witness->betterness(),
                           EvalRule::kMax));

  const ConverseResult dstar =
      converseSearch(findAxiom("Dstar"), P::kMaxLimited, EvalRule::kMax, 3);
  EXPECT_FALSE(dstar.found);
  EXPECT_FALSE(dstar.timedOut);
  EXPECT_GT(dstar.checked, 0u);
}

// Frame-level converse for CM and smoothness finds nothing on small
// frames; in a single model the metavariables have one fixed reading, and
// a non-smooth witness exists.
TEST(ConverseSearchTest, SmoothnessAndCm) {
  const AxiomSchema& cm = findAxiom("CM");
  EXPECT_FALSE(converseSearch(cm, P::kMaxSmooth, EvalRule::kMax, 3).found);
  const ConverseResult model = converseSearch(cm, P::kMaxSmooth, EvalRule::kMax,
                                              3, ConverseLevel::kModel);
  ASSERT_TRUE(model.found);
  EXPECT_FALSE(checkProperty(P::kMaxSmooth, *model.witness));
  EXPECT_TRUE(validInModel(metavarsToAtoms(cm.formula), *model.witness,
                           EvalRule::kMax));
}

TEST(TableSweepTest, EveryRuleAsExpected) {
  for (EvalRule rule : kAllRules) {
    const SweepReport r = tableSweep(rule, 3);
    for (const SweepRow& row : r.rows) {
      EXPECT_TRUE(row.asExpected()) << ruleName(rule) << ": " << row.label;
      if (row.kind == RowKind::kDropped || row.kind == RowKind::kFails) {
        ASSERT_TRUE(row.result.counterexample.has_value());
        EXPECT_TRUE(
            checkAll(row.frames.properties, row.result.counterexample->frame));
      }
    }
    EXPECT_TRUE(r.allAsExpected());
  }
  EXPECT_THROW(tableSweep(EvalRule::kMax, 5), std::invalid_argument);
}

TEST(TableSweepTest, RowsPerRule) {
  auto count = [](const SweepReport& r, RowKind kind) {
    int c = 0;
    for (const SweepRow& row : r.rows) c += row.kind == kind;
    return c;
  };
  const SweepReport max = tableSweep(EvalRule::kMax, 2);
  EXPECT_EQ(count(max, RowKind::kCorrespondence), 4);
  EXPECT_EQ(count(max, RowKind::kDropped), 5);
  const SweepReport lewis = tableSweep(EvalRule::kLewis, 2);
  EXPECT_EQ(count(lewis, RowKind::kCorrespondence), 4);
  EXPECT_EQ(count(lewis, RowKind::kUnconditional), 8);
}

TEST(CollapseTest, WeakOrders) {
  const CollapseResult r =
      collapseCheck(4, {P::kReflexive, P::kTotal, P::kTransitive});
  EXPECT_TRUE(r.confirmed);
  EXPECT_EQ(r.framesChecked, 92u);
  EXPECT_EQ(r.pairsChecked, 1u * 4 + 3u * 16 + 13u * 64 + 75u * 256);
}

TEST(CollapseTest, DiffersWithoutProperties) {
  const CollapseResult r = collapseCheck(2, {});
  ASSERT_FALSE(r.confirmed);
  const auto& c = *r.counterexample;
  const FrameView view(c.frame);
  EXPECT_EQ(c.opt, condHolds(EvalRule::kOpt, c.consequent, c.antecedent, view));
  EXPECT_EQ(c.max, condHolds(EvalRule::kMax, c.consequent, c.antecedent, view));
  EXPECT_FALSE(c.opt == c.max && c.max == c.lewis);
}

}  // namespace
}  // namespace ddl
