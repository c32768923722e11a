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

#include "ddl/semantics.hpp"

#include <string>
#include <vector>

#include "ddl/errors.hpp"
#include "ddl/relprops.hpp"
#include "ddl/schemas.hpp"
#include "gtest/gtest.h"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace ddl {
namespace {

oracle::Rule toOracle(EvalRule r) {
  switch (r) {
    case EvalRule::kOpt:
      return oracle::Rule::kOpt;
    case EvalRule::kMax:
      return oracle::Rule::kMax;
    case EvalRule::kLewis:
      return oracle::Rule::kLewis;
  }
  return oracle::Rule::kOpt;
}

oracle::Bits bits(WorldSet s, int n) {
  oracle::Bits b(n);
  for (int w = 0; w < n; ++w) b[w] = s.contains(w);
  return b;
}

WorldSet set(std::initializer_list<int> worlds) {
  WorldSet s;
  for (int w : worlds) s.insert(w);
  return s;
}

// 1 > 0, both reflexive.
const Relation kOneAboveZero = Relation::fromPairs(2, {{0, 0}, {1, 1}, {1, 0}});

TEST(RuleTest, Names) {
  for (EvalRule r : kAllRules) EXPECT_EQ(parseRule(ruleName(r)), r);
  EXPECT_THROW(parseRule("best"), std::invalid_argument);
}

TEST(BestSetTest, Examples) {
  const FrameView view(kOneAboveZero);
  EXPECT_EQ(bestSet(EvalRule::kOpt, set({0, 1}), view), set({1}));
  EXPECT_EQ(bestSet(EvalRule::kMax, set({0, 1}), view), set({1}));
  EXPECT_EQ(bestSet(EvalRule::kOpt, WorldSet(), view), WorldSet());
  EXPECT_EQ(bestSet(EvalRule::kMax, WorldSet(), view), WorldSet());

  const FrameView bare{Relation(2)};
  EXPECT_EQ(bestSet(EvalRule::kOpt, set({0, 1}), bare), WorldSet());
  EXPECT_EQ(bestSet(EvalRule::kMax, set({0, 1}), bare), set({0, 1}));
  EXPECT_THROW(bestSet(EvalRule::kLewis, set({0}), bare),
               std::invalid_argument);
}

TEST(CondHoldsTest, Examples) {
  const FrameView view(kOneAboveZero);
  for (EvalRule r : kAllRules) {
    EXPECT_TRUE(condHolds(r, WorldSet(), WorldSet(), view));
    EXPECT_TRUE(condHolds(r, set({0}), WorldSet(), view));
    EXPECT_TRUE(condHolds(r, set({1}), set({0, 1}), view)) << ruleName(r);
  }
  // No pairs at all: max keeps both worlds, opt keeps none, and under the
  // Lewis rule world 1 has no world at least as good, so it witnesses Y.
  const FrameView bare{Relation(2)};
  EXPECT_FALSE(condHolds(EvalRule::kMax, set({1}), set({0, 1}), bare));
  EXPECT_TRUE(condHolds(EvalRule::kOpt, set({1}), set({0, 1}), bare));
  EXPECT_TRUE(condHolds(EvalRule::kLewis, set({1}), set({0, 1}), bare));
  for (EvalRule r : kAllRules) {
    EXPECT_EQ(condHolds(r, set({1}), set({0, 1}), bare),
              oracle::oblig(toOracle(r), oracle::fromRelation(Relation(2)),
                            {false, true}, {true, true}));
  }
}

TEST(CondHoldsTest, AgreesWithOracleOnEverySmallFrame) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Relation frame = Relation::fromCode(n, code);
      const FrameView view(frame);
      const oracle::Matrix ge = oracle::fromRelation(frame);
      const WorldSet::Mask top = frame.universe().mask();
      for (WorldSet::Mask x = 0; x <= top; ++x) {
        for (WorldSet::Mask y = 0; y <= top; ++y) {
          for (EvalRule r : kAllRules) {
            ASSERT_EQ(condHolds(r, WorldSet(y), WorldSet(x), view),
                      oracle::oblig(toOracle(r), ge, bits(WorldSet(y), n),
                                    bits(WorldSet(x), n)))
                << toString(frame) << " X=" << x << " Y=" << y;
          }
        }
      }
    }
  }
}

TEST(TruthSetTest, Examples) {
  const PreferenceModel m(kOneAboveZero, {{"p", set({1})}});
  EXPECT_EQ(truthSet(parse("p"), m, {}, EvalRule::kMax), set({1}));
  EXPECT_EQ(truthSet(parse("[](p | ~p)"), m, {}, EvalRule::kMax), m.universe());
  EXPECT_EQ(truthSet(parse("O(p / T)"), m, {}, EvalRule::kOpt), m.universe());
  EXPECT_EQ(truthSet(parse("<>p & ~p"), m, {}, EvalRule::kOpt), set({0}));
  EXPECT_EQ(truthSet(parse("?f"), m, {{"f", set({0})}}, EvalRule::kOpt),
            set({0}));
}

TEST(TruthSetTest, AtomPolicies) {
  const PreferenceModel m(kOneAboveZero, {{"p", set({1})}});
  EXPECT_EQ(truthSet(parse("q"), m, {}, EvalRule::kMax), WorldSet());
  EXPECT_THROW(truthSet(parse("q"), m, {}, EvalRule::kMax, AtomPolicy::kStrict),
               EvalError);
  EXPECT_THROW(truthSet(parse("?f"), m, {}, EvalRule::kMax), EvalError);
  EXPECT_THROW(validInModel(parse("[]?f"), m, EvalRule::kMax), EvalError);
}

TEST(TruthSetTest, AgreesWithOracleOnRandomFormulas) {
  testing::Generator gen(19);
  const std::vector<std::string> names = {"p", "q", "r"};
  for (int i = 0; i < 1500; ++i) {
    const Formula f = gen.formula(5);
    const PreferenceModel m = gen.model(gen.uniform(1, 4), names);
    const EvalRule rule = kAllRules[gen.uniform(0, 2)];
    ASSERT_EQ(truthSet(f, m, {}, rule),
              oracle::toWorldSet(
                  oracle::eval(f, oracle::fromModel(m), toOracle(rule))))
        << render(f) << "\n"
        << serializeModel(m);
  }
}

TEST(CompiledFormulaTest, AgreesWithTruthSet) {
  testing::Generator gen(23);
  const std::vector<std::string> slots = {"p", "q", "?f"};
  testing::FormulaShape shape;
  shape.atoms = {"p", "q"};
  shape.metavars = {"f"};
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula(shape);
    const PreferenceModel m = gen.model(gen.uniform(1, 4), {"p", "q"});
    const WorldSet fv(static_cast<WorldSet::Mask>(
        gen.uniform(0, static_cast<int>(m.universe().mask()))));
    const std::vector<WorldSet> values = {*m.lookup("p"), *m.lookup("q"), fv};
    const EvalRule rule = kAllRules[gen.uniform(0, 2)];
    const CompiledFormula compiled(f, slots);
    ASSERT_EQ(compiled.evaluate(FrameView(m.betterness()), values, rule),
              truthSet(f, m, {{"f", fv}}, rule))
        << render(f);
  }
  EXPECT_EQ(CompiledFormula(parse("p & ?f"), slots).maxSlot(), 2);
  EXPECT_EQ(CompiledFormula(parse("q | p"), slots).maxSlot(), 1);
  EXPECT_EQ(CompiledFormula(parse("[]T"), slots).maxSlot(), -1);
  EXPECT_THROW(CompiledFormula(parse("r"), slots), EvalError);
}

TEST(ValidInModelTest, IdentityInstanceOnEveryModel) {
  const Formula id = parse("O(p / p)");
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      for (WorldSet::Mask v = 0; v < (1u << n); ++v) {
        const PreferenceModel m(Relation::fromCode(n, code),
                                {{"p", WorldSet(v)}});
        ASSERT_TRUE(validInModel(id, m, EvalRule::kOpt));
        ASSERT_TRUE(validInModel(id, m, EvalRule::kMax));
      }
    }
  }
}

TEST(ValidInModelTest, EmptyObligationFails) {
  const PreferenceModel m(kOneAboveZero, {{"p", WorldSet()}});
  EXPECT_FALSE(validInModel(parse("O(p / T)"), m, EvalRule::kMax));
  EXPECT_FALSE(validInModel(parse("O(p / T)"), m, EvalRule::kOpt));
}

TEST(ValidOnFrameTest, AgreesWithOracleForTheRegistry) {
  for (const AxiomSchema& axiom : axiomRegistry()) {
    for (int n = 1; n <= 2; ++n) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n));
           ++code) {
        const Relation frame = Relation::fromCode(n, code);
        for (EvalRule r : kAllRules) {
          ASSERT_EQ(
              validOnFrame(axiom.formula, frame, r),
              oracle::validOnFrame(axiom.formula, oracle::fromRelation(frame),
                                   toOracle(r)))
              << axiom.name << " " << toString(frame) << " " << ruleName(r);
        }
      }
    }
  }
  testing::Generator gen(29);
  for (int i = 0; i < 60; ++i) {
    const Relation frame = gen.relation(3);
    for (const char* name : {"Dstar", "Sp", "CM"}) {
      const Formula f = findAxiom(name).formula;
      for (EvalRule r : kAllRules) {
        ASSERT_EQ(
            validOnFrame(f, frame, r),
            oracle::validOnFrame(f, oracle::fromRelation(frame), toOracle(r)));
      }
    }
  }
}

TEST(ValidOnFrameTest, RejectsAtoms) {
  EXPECT_THROW(validOnFrame(parse("p -> ?f"), Relation(1), EvalRule::kMax),
               EvalError);
}

TEST(ValidOnFrameTest, RegressionExamples) {
  EXPECT_TRUE(
      validOnFrame(findAxiom("Sh").formula, Relation::full(3), EvalRule::kMax));
  // With no pairs, opt(X) is empty while max(X) = X, so D* fails under opt
  // only.
  EXPECT_FALSE(
      validOnFrame(findAxiom("Dstar").formula, Relation(1), EvalRule::kOpt));
  EXPECT_TRUE(
      validOnFrame(findAxiom("Dstar").formula, Relation(3), EvalRule::kMax));
  // 0 > 1 > 2 > 0 leaves no max-best world in the whole frame.
  EXPECT_FALSE(validOnFrame(findAxiom("Dstar").formula,
                            Relation::fromPairs(3, {{0, 1}, {1, 2}, {2, 0}}),
                            EvalRule::kMax));
}

TEST(ValidOnFrameTest, CokFailsOnSomeTwoWorldNonTotalFrameUnderLewis) {
  int failures = 0;
  for (std::uint64_t code = 0; code < 16; ++code) {
    const Relation frame = Relation::fromCode(2, code);
    if (checkProperty(RelationProperty::kTotal, frame)) continue;
    if (!validOnFrame(findAxiom("COK").formula, frame, EvalRule::kLewis)) {
      ++failures;
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(FalsifyingAssignmentTest, IsTheLowestFalsifier) {
  const Formula dstar = findAxiom("Dstar").formula;
  for (std::uint64_t code = 0; code < 16; ++code) {
    const Relation frame = Relation::fromCode(2, code);
    for (EvalRule r : kAllRules) {
      const auto found = falsifyingAssignment(dstar, frame, r);
      // Odometer over (?f, ?g), ?f most significant.
      std::optional<Assignment> expected;
      for (WorldSet::Mask f = 0; f < 4 && !expected; ++f) {
        for (WorldSet::Mask g = 0; g < 4 && !expected; ++g) {
          std::map<std::string, oracle::Bits> a = {{"f", bits(WorldSet(f), 2)},
                                                   {"g", bits(WorldSet(g), 2)}};
          const oracle::NaiveModel m{2, oracle::fromRelation(frame), {}};
          for (bool b : oracle::eval(dstar, m, toOracle(r), a)) {
            if (!b) {
              expected = Assignment{{"f", WorldSet(f)}, {"g", WorldSet(g)}};
              break;
            }
          }
        }
      }
      ASSERT_EQ(found, expected) << toString(frame) << " " << ruleName(r);
    }
  }
}

TEST(FalsifyingAssignmentTest, DexHasALewisCountermodel) {
  const Formula dex = findAxiom("DEX").formula;
  std::optional<PreferenceModel> counter;
  for (int n = 1; n <= 3 && !counter; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Relation frame = Relation::fromCode(n, code);
      if (auto a = falsifyingAssignment(dex, frame, EvalRule::kLewis)) {
        Valuation v(a->begin(), a->end());
        counter = PreferenceModel(frame, v);
        break;
      }
    }
  }
  ASSERT_TRUE(counter.has_value());
  EXPECT_FALSE(validInModel(metavarsToAtoms(dex), *counter, EvalRule::kLewis));
  EXPECT_TRUE(validInModel(metavarsToAtoms(dex), *counter, EvalRule::kMax));
}

}  // namespace
}  // namespace ddl
