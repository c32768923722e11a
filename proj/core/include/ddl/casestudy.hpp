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

// The mere addition scenario over populations A, A+ (atom "Ap") and B.
//
//   eq0  P(A / A | B)        eq0 & eq3 encode A > B
//   eq1  P(Ap / A | Ap)      Ap >= A
//   eq2  O(~Ap / Ap | B)     eq2 & eq4 encode B > Ap
//   eq3  O(~B / A | B)
//   eq4  P(B / Ap | B)
//
// Every "unsatisfiable" verdict here is relative to the searched bound;
// infinite models are never searched.

#ifndef DDL_CASESTUDY_HPP_
#define DDL_CASESTUDY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ddl/finder.hpp"
#include "ddl/formula.hpp"
#include "ddl/relprops.hpp"
#include "ddl/semantics.hpp"

namespace ddl::mere_addition {

inline const std::vector<std::string>& scenarioAtoms() {
  static const std::vector<std::string> kAtoms = {"A", "Ap", "B"};
  return kAtoms;
}

// 0 <= i <= 4.
Formula equation(int i);
std::vector<Formula> equations(const std::vector<int>& indices);
std::vector<Formula> allEquations();

// PP0 = {eq0, eq3}, PP1 = {eq1}, PP2 = {eq2, eq4}.
std::vector<int> group(int pp);

// The same comparisons written with the preference connectives:
// A > B, Ap >= A, B > Ap.
std::vector<Formula> sugaredScenario();

// Smallest bound at which the findings carry an expected verdict; some
// satisfying models need four worlds.
inline constexpr int kExpectationBound = 4;

struct GridRow {
  std::string label;
  PropertySet properties;
};

// None, transitivity + totality, transitivity, interval order,
// quasi-transitivity, acyclicity.
const std::vector<GridRow>& gridRows();

struct Finding {
  std::string label;
  std::vector<int> equations;
  PropertySet properties;
  EvalRule rule = EvalRule::kMax;
  // Properties the model must lack (used to ask for a strict cycle).
  PropertySet excluded;
  SearchResult result;
  // The witness was re-evaluated: every equation valid, every imposed
  // property present, every excluded one absent.
  bool verified = false;
  std::optional<StrictChain> chain;
  // Expected outcome, when the finding has one.
  std::optional<bool> expectSat;

  bool asExpected() const;
};

// Runs one search for the given equations and re-validates the witness.
Finding investigate(std::string label, std::vector<int> eqs,
                    PropertySet properties, EvalRule rule, int maxN,
                    const SearchOptions& options, PropertySet excluded = {});

struct GridReport {
  int maxN = 0;
  // Row-major over gridRows() x {opt, max, lewis}.
  std::vector<Finding> cells;
};

GridReport runGrid(int maxN, const SearchOptions& options = {});

struct EvidenceReport {
  std::string title;
  int maxN = 0;
  std::vector<Finding> findings;
  std::string note;

  bool allAsExpected() const;
};

// {eq1, eq2, eq3} under max with quasi-transitivity and with transitivity,
// and the same equations with a strictly cyclic witness once the property
// is dropped.
EvidenceReport cycleEvidence(int maxN, const SearchOptions& options = {});

// eq4 alongside eq1 and eq3 (and with eq2) under max on interval orders, and
// eq1 & eq3 alone as a control.
EvidenceReport intervalEvidence(int maxN, const SearchOptions& options = {});

// eq1 & eq2 & eq3 under max on quasi-transitive, transitive and
// (reflexive) interval-order relations.
EvidenceReport fmpEvidence(int maxN, const SearchOptions& options = {});

}  // namespace ddl::mere_addition

#endif  // DDL_CASESTUDY_HPP_
