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

#include "ddl/casestudy.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace ddl::mere_addition {
namespace {

using P = RelationProperty;

SearchOptions fast() {
  SearchOptions o;
  o.isoReject = true;
  return o;
}

bool satisfiesAll(const std::vector<int>& eqs, const PreferenceModel& m,
                  oracle::Rule rule) {
  const oracle::NaiveModel naive = oracle::fromModel(m);
  for (int i : eqs) {
    for (bool b : oracle::eval(equation(i), naive, rule)) {
      if (!b) return false;
    }
  }
  return true;
}

oracle::Rule toOracle(EvalRule r) {
  return r == EvalRule::kOpt   ? oracle::Rule::kOpt
         : r == EvalRule::kMax ? oracle::Rule::kMax
                               : oracle::Rule::kLewis;
}

TEST(ScenarioTest, Equations) {
  std::vector<std::string> text;
  for (const Formula& f : allEquations()) text.push_back(render(f));
  EXPECT_EQ(text, (std::vector<std::string>{"P(A / A | B)", "P(Ap / A | Ap)",
                                            "O(~Ap / Ap | B)", "O(~B / A | B)",
                                            "P(B / Ap | B)"}));
  EXPECT_EQ(group(0), (std::vector<int>{0, 3}));
  EXPECT_EQ(group(1), (std::vector<int>{1}));
  EXPECT_EQ(group(2), (std::vector<int>{2, 4}));
  EXPECT_THROW(equation(5), std::out_of_range);
  EXPECT_THROW(group(3), std::out_of_range);
}

TEST(ScenarioTest, SugarMeansTheSameAsTheEquations) {
  testing::Generator gen(7);
  for (int i = 0; i < 300; ++i) {
    const PreferenceModel m = gen.model(gen.uniform(1, 4), scenarioAtoms());
    for (EvalRule rule : kAllRules) {
      WorldSet plain = m.universe();
      for (const Formula& f : allEquations())
        plain = plain & truthSet(f, m, {}, rule);
      WorldSet sugared = m.universe();
      for (const Formula& f : sugaredScenario()) {
        sugared = sugared & truthSet(f, m, {}, rule);
      }
      ASSERT_EQ(plain, sugared) << serializeModel(m);
    }
  }
}

TEST(GridTest, MatchesTheExpectedPattern) {
  const GridReport grid = runGrid(kExpectationBound, fast());
  ASSERT_EQ(grid.cells.size(), gridRows().size() * 3);
  const std::vector<std::vector<bool>> sat = {
      {true, true, true},    {false, false, false}, {false, false, false},
      {false, false, false}, {true, false, true},   {true, true, true}};
  for (std::size_t r = 0; r < gridRows().size(); ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const Finding& f = grid.cells[r * 3 + c];
      SCOPED_TRACE(f.label + " / " + std::string(ruleName(f.rule)));
      EXPECT_EQ(f.rule, kAllRules[c]);
      EXPECT_TRUE(f.asExpected());
      ASSERT_EQ(f.result.found(), sat[r][c]);
      if (f.result.found()) {
        const PreferenceModel& m = *f.result.model;
        EXPECT_TRUE(f.verified);
        EXPECT_TRUE(satisfiesAll({0, 1, 2, 3, 4}, m, toOracle(f.rule)));
        EXPECT_TRUE(checkAll(gridRows()[r].properties, m.betterness()));
        ASSERT_TRUE(f.chain.has_value());
      } else {
        EXPECT_EQ(f.result.status, SearchStatus::kExhausted);
        for (const SizeStats& s : f.result.sizes) {
          EXPECT_EQ(s.models, s.frames << (3 * s.n)) << "n=" << s.n;
        }
      }
    }
  }
}

TEST(GridTest, NoExpectationBelowTheBound) {
  const GridReport grid = runGrid(2, fast());
  for (const Finding& f : grid.cells) {
    EXPECT_FALSE(f.expectSat.has_value());
    EXPECT_TRUE(f.asExpected());
  }
}

// A satisfying model for the bare scenario must have a strict cycle or
// break transitivity; with no property imposed it may be either.
TEST(GridTest, UnrestrictedWitnessIsNotAWeakOrder) {
  const Finding f = investigate("none", {0, 1, 2, 3, 4}, {}, EvalRule::kMax,
                                kExpectationBound, fast());
  ASSERT_TRUE(f.result.found());
  EXPECT_FALSE(
      checkAll({P::kTransitive, P::kTotal}, f.result.model->betterness()));
}

TEST(EvidenceTest, CycleNeeded) {
  const EvidenceReport r = cycleEvidence(kExpectationBound, fast());
  ASSERT_EQ(r.findings.size(), 3u);
  EXPECT_TRUE(r.allAsExpected());
  const Finding& cyclic = r.findings[2];
  ASSERT_TRUE(cyclic.result.found());
  ASSERT_TRUE(cyclic.chain.has_value());
  EXPECT_TRUE(cyclic.chain->cyclic);
  EXPECT_FALSE(checkProperty(P::kAcyclic, *cyclic.result.model));
}

TEST(EvidenceTest, FiniteModels) {
  const EvidenceReport r = fmpEvidence(kExpectationBound, fast());
  EXPECT_EQ(r.findings.size(), 3u);
  EXPECT_TRUE(r.allAsExpected());
  EXPECT_FALSE(r.note.empty());
}

// On interval orders, eq1 & eq3 & eq4 are jointly satisfiable; only adding
// eq2 makes the set unsatisfiable.
TEST(EvidenceTest, IntervalOrders) {
  const EvidenceReport r = intervalEvidence(kExpectationBound, fast());
  ASSERT_EQ(r.findings.size(), 3u);
  const Finding& withoutEq2 = r.findings[0];
  ASSERT_TRUE(withoutEq2.result.found());
  EXPECT_TRUE(withoutEq2.verified);
  const PreferenceModel& m = *withoutEq2.result.model;
  EXPECT_TRUE(satisfiesAll({1, 3, 4}, m, oracle::Rule::kMax));
  EXPECT_TRUE(oracle::total(oracle::fromModel(m).ge));
  EXPECT_TRUE(oracle::ferrers(oracle::fromModel(m).ge));

  EXPECT_FALSE(r.findings[1].result.found());
  EXPECT_TRUE(r.findings[1].asExpected());
  EXPECT_TRUE(r.findings[2].result.found());
  EXPECT_TRUE(r.findings[2].asExpected());
}

TEST(InvestigateTest, HonoursExclusions) {
  const Finding f = investigate("cycle", {1, 2, 3}, {}, EvalRule::kMax, 3,
                                fast(), {P::kAcyclic});
  ASSERT_TRUE(f.result.found());
  EXPECT_TRUE(f.verified);
  EXPECT_FALSE(checkProperty(P::kAcyclic, *f.result.model));
  EXPECT_FALSE(f.expectSat.has_value());
  // Every scenario atom appears in the witness valuation.
  for (const std::string& a : scenarioAtoms()) {
    EXPECT_TRUE(f.result.model->lookup(a).has_value()) << a;
  }
}

}  // namespace
}  // namespace ddl::mere_addition
