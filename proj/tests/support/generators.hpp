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

// Seeded random formulas, relations and models for property tests.

#ifndef DDL_TESTS_SUPPORT_GENERATORS_HPP_
#define DDL_TESTS_SUPPORT_GENERATORS_HPP_

#include <random>
#include <string>
#include <vector>

#include "ddl/formula.hpp"
#include "ddl/model.hpp"

namespace ddl::testing {

struct FormulaShape {
  int maxDepth = 4;
  std::vector<std::string> atoms = {"p", "q", "r"};
  std::vector<std::string> metavars;
  // Allow T, F, <->, <>, P, >= and > besides the core connectives.
  bool sugar = true;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  Formula formula(const FormulaShape& shape);
  Formula formula(int maxDepth) { return formula(FormulaShape{maxDepth}); }
  Relation relation(int n);
  // Values every atom listed; each world is in each set with probability 1/2.
  PreferenceModel model(int n, const std::vector<std::string>& atoms);
  int uniform(int lo, int hi);

 private:
  Formula leaf(const FormulaShape& shape);

  std::mt19937_64 rng_;
};

}  // namespace ddl::testing

#endif  // DDL_TESTS_SUPPORT_GENERATORS_HPP_
