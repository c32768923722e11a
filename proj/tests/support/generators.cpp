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

#include "support/generators.hpp"

namespace ddl::testing {

int Generator::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Formula Generator::leaf(const FormulaShape& shape) {
  const int symbols =
      static_cast<int>(shape.atoms.size() + shape.metavars.size());
  const int pick = uniform(0, symbols + (shape.sugar ? 1 : -1));
  if (pick < static_cast<int>(shape.atoms.size())) {
    return Atom(shape.atoms[pick]);
  }
  if (pick < symbols) return MetaVar(shape.metavars[pick - shape.atoms.size()]);
  return pick == symbols ? Top() : Bot();
}

Formula Generator::formula(const FormulaShape& shape) {
  if (shape.maxDepth <= 0 || uniform(0, 3) == 0) return leaf(shape);
  FormulaShape inner = shape;
  --inner.maxDepth;
  const int kinds = shape.sugar ? 13 : 6;
  switch (uniform(0, kinds - 1)) {
    case 0:
      return Not(formula(inner));
    case 1:
      return Or(formula(inner), formula(inner));
    case 2:
      return And(formula(inner), formula(inner));
    case 3:
      return Implies(formula(inner), formula(inner));
    case 4:
      return Box(formula(inner));
    case 5:
      return Oblig(formula(inner), formula(inner));
    case 6:
      return Iff(formula(inner), formula(inner));
    case 7:
      return Diamond(formula(inner));
    case 8:
      return Perm(formula(inner), formula(inner));
    case 9:
      return PrefGeq(formula(inner), formula(inner));
    case 10:
      return PrefGt(formula(inner), formula(inner));
    default:
      return Not(formula(inner));
  }
}

Relation Generator::relation(int n) {
  Relation r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r.set(i, j, uniform(0, 1) == 1);
  }
  return r;
}

PreferenceModel Generator::model(int n, const std::vector<std::string>& atoms) {
  Valuation v;
  for (const std::string& a : atoms) {
    WorldSet s;
    for (int w = 0; w < n; ++w) {
      if (uniform(0, 1) == 1) s.insert(w);
    }
    v.emplace(a, s);
  }
  return PreferenceModel(relation(n), std::move(v));
}

}  // namespace ddl::testing
