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

#include <algorithm>
#include <stdexcept>

#include "ddl/errors.hpp"

namespace ddl {

std::string_view ruleName(EvalRule rule) {
  switch (rule) {
    case EvalRule::kOpt:
      return "opt";
    case EvalRule::kMax:
      return "max";
    case EvalRule::kLewis:
      return "lewis";
  }
  throw std::logic_error("unhandled rule");
}

EvalRule parseRule(std::string_view name) {
  for (EvalRule r : kAllRules) {
    if (ruleName(r) == name) return r;
  }
  throw std::invalid_argument("unknown rule '" + std::string(name) +
                              "' (expected opt, max or lewis)");
}

FrameView::FrameView(const Relation& betterness)
    : n_(betterness.size()), universe_(betterness.universe()) {
  for (int a = 0; a < n_; ++a) {
    below_[a] = betterness.row(a);
    above_[a] = betterness.column(a);
  }
  for (int a = 0; a < n_; ++a) strictAbove_[a] = above_[a] - below_[a];
}

WorldSet bestSet(EvalRule rule, WorldSet x, const FrameView& frame) {
  WorldSet best;
  switch (rule) {
    case EvalRule::kOpt:
      for (int a : x) {
        if (x.isSubsetOf(frame.dominatedBy(a))) best.insert(a);
      }
      return best;
    case EvalRule::kMax:
      for (int a : x) {
        if ((x & frame.strictlyBetter(a)).empty()) best.insert(a);
      }
      return best;
    case EvalRule::kLewis:
      break;
  }
  throw std::invalid_argument("the Lewis rule has no best set");
}

WorldSet bestSet(EvalRule rule, WorldSet x, const PreferenceModel& m) {
  return bestSet(rule, x, FrameView(m.betterness()));
}

bool condHolds(EvalRule rule, WorldSet y, WorldSet x, const FrameView& frame) {
  if (rule != EvalRule::kLewis) return bestSet(rule, x, frame).isSubsetOf(y);
  if (x.empty()) return true;
  const WorldSet violating = x - y;
  for (int b : x& y) {
    if ((frame.atLeastAsGood(b) & violating).empty()) return true;
  }
  return false;
}

bool condHolds(EvalRule rule, WorldSet y, WorldSet x,
               const PreferenceModel& m) {
  return condHolds(rule, y, x, FrameView(m.betterness()));
}

namespace {

class Evaluator {
 public:
  Evaluator(const PreferenceModel& m, const Assignment& a, EvalRule rule,
            AtomPolicy policy)
      : model_(m),
        assignment_(a),
        rule_(rule),
        policy_(policy),
        frame_(m.betterness()),
        all_(m.universe()) {}

  WorldSet eval(const Formula& f) const {
    switch (f.connective()) {
      case Connective::kAtom: {
        if (auto s = model_.lookup(f.name())) return *s;
        if (policy_ == AtomPolicy::kStrict) {
          throw EvalError("atom '" + f.name() + "' has no valuation");
        }
        return {};
      }
      case Connective::kMetaVar: {
        auto it = assignment_.find(f.name());
        if (it == assignment_.end()) {
          throw EvalError("metavariable ?" + f.name() + " is unbound");
        }
        return it->second & all_;
      }
      case Connective::kTop:
        return all_;
      case Connective::kBot:
        return {};
      case Connective::kNot:
        return all_ - eval(f.operand(0));
      case Connective::kOr:
        return eval(f.operand(0)) | eval(f.operand(1));
      case Connective::kAnd:
        return eval(f.operand(0)) & eval(f.operand(1));
      case Connective::kImplies:
        return (all_ - eval(f.operand(0))) | eval(f.operand(1));
      case Connective::kIff: {
        const WorldSet a = eval(f.operand(0));
        const WorldSet b = eval(f.operand(1));
        return all_ - ((a - b) | (b - a));
      }
      case Connective::kBox:
        return everywhere(eval(f.operand(0)) == all_);
      case Connective::kDiamond:
        return everywhere(!eval(f.operand(0)).empty());
      case Connective::kOblig:
        return everywhere(
            obligatory(eval(f.consequent()), eval(f.antecedent())));
      case Connective::kPerm:
        return everywhere(
            permitted(eval(f.consequent()), eval(f.antecedent())));
      case Connective::kPrefGeq: {
        const WorldSet a = eval(f.operand(0));
        const WorldSet b = eval(f.operand(1));
        return everywhere(permitted(a, a | b));
      }
      case Connective::kPrefGt: {
        const WorldSet a = eval(f.operand(0));
        const WorldSet b = eval(f.operand(1));
        return everywhere(permitted(a, a | b) && obligatory(all_ - b, a | b));
      }
    }
    throw std::logic_error("unhandled connective");
  }

 private:
  WorldSet everywhere(bool holds) const { return holds ? all_ : WorldSet(); }
  bool obligatory(WorldSet y, WorldSet x) const {
    return condHolds(rule_, y, x, frame_);
  }
  bool permitted(WorldSet y, WorldSet x) const {
    return !condHolds(rule_, all_ - y, x, frame_);
  }

  const PreferenceModel& model_;
  const Assignment& assignment_;
  EvalRule rule_;
  AtomPolicy policy_;
  FrameView frame_;
  WorldSet all_;
};

}  // namespace

WorldSet truthSet(const Formula& f, const PreferenceModel& m,
                  const Assignment& assignment, EvalRule rule,
                  AtomPolicy policy) {
  return Evaluator(m, assignment, rule, policy).eval(f);
}

bool validInModel(const Formula& f, const PreferenceModel& m, EvalRule rule,
                  AtomPolicy policy) {
  if (!metavars(f).empty()) {
    throw EvalError(
        "validity in a model needs a formula without "
        "metavariables: " +
        render(f));
  }
  return truthSet(f, m, {}, rule, policy) == m.universe();
}

std::optional<Assignment> falsifyingAssignment(const Formula& schema,
                                               const Relation& frame,
                                               EvalRule rule) {
  if (!atoms(schema).empty()) {
    throw EvalError("frame validity needs a schema over metavariables only: " +
                    render(schema));
  }
  std::vector<std::string> slots;
  for (const std::string& name : metavars(schema)) slots.push_back("?" + name);
  const CompiledFormula compiled(schema, slots);
  const FrameView view(frame);
  const WorldSet all = frame.universe();
  const std::size_t k = slots.size();

  // Mixed-radix odometer; slot 0 is the most significant digit.
  std::vector<WorldSet> values(k);
  for (;;) {
    if (compiled.evaluate(view, values, rule) != all) {
      Assignment out;
      for (std::size_t i = 0; i < k; ++i) {
        out.emplace(slots[i].substr(1), values[i]);
      }
      return out;
    }
    std::size_t digit = k;
    for (;;) {
      if (digit == 0) return std::nullopt;
      --digit;
      if (values[digit] != all) {
        values[digit] = WorldSet(values[digit].mask() + 1);
        break;
      }
      values[digit] = WorldSet();
    }
  }
}

bool validOnFrame(const Formula& schema, const Relation& frame, EvalRule rule) {
  return !falsifyingAssignment(schema, frame, rule).has_value();
}

// ---------------------------------------------------------------------------
// Compiled evaluation

std::string slotKey(const Formula& symbol) {
  switch (symbol.connective()) {
    case Connective::kAtom:
      return symbol.name();
    case Connective::kMetaVar:
      return "?" + symbol.name();
    default:
      throw std::invalid_argument("not an atom or metavariable");
  }
}

CompiledFormula::CompiledFormula(const Formula& f,
                                 std::span<const std::string> slots) {
  if (slots.size() > 255) throw std::invalid_argument("too many slots");
  emit(f, slots);
  // Postfix code: track the stack high-water mark.
  int depth = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::kSlot:
      case Op::kTop:
      case Op::kBot:
        ++depth;
        break;
      case Op::kNot:
      case Op::kBox:
      case Op::kDiamond:
        break;
      default:
        --depth;
        break;
    }
    stackDepth_ = std::max(stackDepth_, depth + 1);
  }
}

void CompiledFormula::emit(const Formula& f,
                           std::span<const std::string> slots) {
  auto push = [&](Op op) { code_.push_back({op, 0}); };
  for (const Formula& op : f.operands()) emit(op, slots);
  switch (f.connective()) {
    case Connective::kAtom:
    case Connective::kMetaVar: {
      const std::string key = slotKey(f);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] == key) {
          code_.push_back({Op::kSlot, static_cast<std::uint8_t>(i)});
          maxSlot_ = std::max(maxSlot_, static_cast<int>(i));
          return;
        }
      }
      throw EvalError("no slot for '" + key + "'");
    }
    case Connective::kTop:
      push(Op::kTop);
      return;
    case Connective::kBot:
      push(Op::kBot);
      return;
    case Connective::kNot:
      push(Op::kNot);
      return;
    case Connective::kOr:
      push(Op::kOr);
      return;
    case Connective::kAnd:
      push(Op::kAnd);
      return;
    case Connective::kImplies:
      push(Op::kImplies);
      return;
    case Connective::kIff:
      push(Op::kIff);
      return;
    case Connective::kBox:
      push(Op::kBox);
      return;
    case Connective::kDiamond:
      push(Op::kDiamond);
      return;
    case Connective::kOblig:
      push(Op::kOblig);
      return;
    case Connective::kPerm:
      push(Op::kPerm);
      return;
    case Connective::kPrefGeq:
      push(Op::kPrefGeq);
      return;
    case Connective::kPrefGt:
      push(Op::kPrefGt);
      return;
  }
}

WorldSet CompiledFormula::evaluate(const FrameView& frame,
                                   std::span<const WorldSet> values,
                                   EvalRule rule) const {
  constexpr int kInlineStack = 64;
  WorldSet inlineStack[kInlineStack];
  std::vector<WorldSet> heapStack;
  WorldSet* stack = inlineStack;
  if (stackDepth_ > kInlineStack) {
    heapStack.resize(stackDepth_);
    stack = heapStack.data();
  }
  const WorldSet all = frame.universe();
  auto everywhere = [&](bool b) { return b ? all : WorldSet(); };
  int top = -1;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::kSlot:
        stack[++top] = values[in.slot] & all;
        break;
      case Op::kTop:
        stack[++top] = all;
        break;
      case Op::kBot:
        stack[++top] = WorldSet();
        break;
      case Op::kNot:
        stack[top] = all - stack[top];
        break;
      case Op::kBox:
        stack[top] = everywhere(stack[top] == all);
        break;
      case Op::kDiamond:
        stack[top] = everywhere(!stack[top].empty());
        break;
      default: {
        const WorldSet b = stack[top--];
        const WorldSet a = stack[top];
        WorldSet r;
        switch (in.op) {
          case Op::kOr:
            r = a | b;
            break;
          case Op::kAnd:
            r = a & b;
            break;
          case Op::kImplies:
            r = (all - a) | b;
            break;
          case Op::kIff:
            r = all - ((a - b) | (b - a));
            break;
          case Op::kOblig:
            r = everywhere(condHolds(rule, a, b, frame));
            break;
          case Op::kPerm:
            r = everywhere(!condHolds(rule, all - a, b, frame));
            break;
          case Op::kPrefGeq:
            r = everywhere(!condHolds(rule, all - a, a | b, frame));
            break;
          case Op::kPrefGt:
            r = everywhere(!condHolds(rule, all - a, a | b, frame) &&
                           condHolds(rule, all - b, a | b, frame));
            break;
          default:
            throw std::logic_error("bad opcode");
        }
        stack[top] = r;
      }
    }
  }
  return stack[top];
}

}  // namespace ddl
