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

// Abstract syntax of the dyadic deontic object language, its ASCII surface
// syntax, and the expansion of derived connectives into the core
// {atom, metavariable, T, ~, |, [], O(/)}.
//
// Concrete grammar (whitespace-insensitive):
//
//   formula  := iff [ (">=" | ">") iff ]
//   iff      := impl ("<->" impl)*          left associative
//   impl     := or ["->" impl]              right associative
//   or       := and ("|" and)*              left associative
//   and      := unary ("&" unary)*          left associative
//   unary    := "~" unary | "[]" unary | "<>" unary | atomlike
//   atomlike := "T" | "F" | IDENT | "?" IDENT
//             | "O(" formula "/" formula ")" | "P(" formula "/" formula ")"
//             | "(" formula ")"
//
// A preference comparison nested inside another operator must be
// parenthesized, e.g. "(A >= B) & (B >= C)".

#ifndef DDL_FORMULA_HPP_
#define DDL_FORMULA_HPP_

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ddl {

enum class Connective : std::uint8_t {
  kAtom,
  kMetaVar,
  kTop,
  kBot,
  kNot,
  kOr,
  kAnd,
  kImplies,
  kIff,
  kBox,
  kDiamond,
  kOblig,  // operands: consequent, antecedent
  kPerm,   // operands: consequent, antecedent
  kPrefGeq,
  kPrefGt,
};

// Immutable formula tree with structural equality. Copies share nodes.
class Formula {
 public:
  Connective connective() const { return node_->connective; }
  // Identifier of an atom or metavariable; empty otherwise.
  const std::string& name() const { return node_->name; }
  std::size_t arity() const { return node_->operands.size(); }
  const Formula& operand(std::size_t i) const { return node_->operands.at(i); }
  const std::vector<Formula>& operands() const { return node_->operands; }

  // For kOblig / kPerm.
  const Formula& consequent() const { return operand(0); }
  const Formula& antecedent() const { return operand(1); }

  bool isCore() const;

  friend bool operator==(const Formula& a, const Formula& b);

  static Formula make(Connective c, std::string name,
                      std::vector<Formula> operands);

 private:
  struct Node {
    Connective connective;
    std::string name;
    std::vector<Formula> operands;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Constructors mirroring the abstract syntax. Atom and MetaVar require an
// identifier ([A-Za-z_][A-Za-z0-9_]*, not "T" or "F") and throw
// std::invalid_argument otherwise.
Formula Atom(std::string name);
Formula MetaVar(std::string name);
Formula Top();
Formula Bot();
Formula Not(Formula f);
Formula Or(Formula a, Formula b);
Formula And(Formula a, Formula b);
Formula Implies(Formula a, Formula b);
Formula Iff(Formula a, Formula b);
Formula Box(Formula f);
Formula Diamond(Formula f);
Formula Oblig(Formula consequent, Formula antecedent);
Formula Perm(Formula consequent, Formula antecedent);
Formula PrefGeq(Formula a, Formula b);
Formula PrefGt(Formula a, Formula b);

bool isIdentifier(std::string_view text);

// Throws ParseError on malformed input.
Formula parse(std::string_view text);

// Canonical printer; parse(render(f)) == f for every f.
std::string render(const Formula& f);

// Rewrites every derived connective into the core connectives. Does not
// simplify (double negations are kept).
Formula expand(const Formula& f);

// Names (without the leading '?') of the metavariables occurring in f.
std::set<std::string> metavars(const Formula& f);
// Names of the ordinary atoms occurring in f.
std::set<std::string> atoms(const Formula& f);

// Replaces each metavariable ?x by the atom x.
Formula metavarsToAtoms(const Formula& f);

// Number of connectives on the longest root-to-leaf path; leaves have depth 0.
int depth(const Formula& f);

}  // namespace ddl

#endif  // DDL_FORMULA_HPP_
