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

#include "ddl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "ddl/errors.hpp"

namespace ddl {

Formula Formula::make(Connective c, std::string name,
                      std::vector<Formula> operands) {
  return Formula(std::make_shared<const Node>(
      Node{c, std::move(name), std::move(operands)}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->connective == b.node_->connective &&
         a.node_->name == b.node_->name &&
         a.node_->operands == b.node_->operands;
}

bool Formula::isCore() const {
  switch (connective()) {
    case Connective::kAtom:
    case Connective::kMetaVar:
    case Connective::kTop:
    case Connective::kNot:
    case Connective::kOr:
    case Connective::kBox:
    case Connective::kOblig:
      break;
    default:
      return false;
  }
  for (const Formula& op : operands()) {
    if (!op.isCore()) return false;
  }
  return true;
}

bool isIdentifier(std::string_view text) {
  if (text.empty() || text == "T" || text == "F") return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

namespace {

Formula leaf(Connective c, std::string name) {
  if (!isIdentifier(name)) {
    throw std::invalid_argument("not an identifier: '" + name + "'");
  }
  return Formula::make(c, std::move(name), {});
}

Formula unary(Connective c, Formula f) {
  return Formula::make(c, {}, {std::move(f)});
}

Formula binary(Connective c, Formula a, Formula b) {
  return Formula::make(c, {}, {std::move(a), std::move(b)});
}

}  // namespace

Formula Atom(std::string name) {
  return leaf(Connective::kAtom, std::move(name));
}
Formula MetaVar(std::string name) {
  return leaf(Connective::kMetaVar, std::move(name));
}
Formula Top() { return Formula::make(Connective::kTop, {}, {}); }
Formula Bot() { return Formula::make(Connective::kBot, {}, {}); }
Formula Not(Formula f) { return unary(Connective::kNot, std::move(f)); }
Formula Or(Formula a, Formula b) {
  return binary(Connective::kOr, std::move(a), std::move(b));
}
Formula And(Formula a, Formula b) {
  return binary(Connective::kAnd, std::move(a), std::move(b));
}
Formula Implies(Formula a, Formula b) {
  return binary(Connective::kImplies, std::move(a), std::move(b));
}
Formula Iff(Formula a, Formula b) {
  return binary(Connective::kIff, std::move(a), std::move(b));
}
Formula Box(Formula f) { return unary(Connective::kBox, std::move(f)); }
Formula Diamond(Formula f) { return unary(Connective::kDiamond, std::move(f)); }
Formula Oblig(Formula consequent, Formula antecedent) {
  return binary(Connective::kOblig, std::move(consequent),
                std::move(antecedent));
}
Formula Perm(Formula consequent, Formula antecedent) {
  return binary(Connective::kPerm, std::move(consequent),
                std::move(antecedent));
}
Formula PrefGeq(Formula a, Formula b) {
  return binary(Connective::kPrefGeq, std::move(a), std::move(b));
}
Formula PrefGt(Formula a, Formula b) {
  return binary(Connective::kPrefGt, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
  kEnd,
  kIdent,
  kMeta,
  kTop,
  kBot,
  kLParen,
  kRParen,
  kSlash,
  kNot,
  kBox,
  kDiamond,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kGeq,
  kGt,
  kObligOpen,
  kPermOpen,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipSpace();
      const std::size_t start = i_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::kEnd, {}, start});
        return out;
      }
      const char c = src_[i_];
      auto u = static_cast<unsigned char>(c);
      if (std::isalpha(u) || c == '_') {
        std::string id = ident();
        if (id == "T") {
          out.push_back({Tok::kTop, id, start});
        } else if (id == "F") {
          out.push_back({Tok::kBot, id, start});
        } else if ((id == "O" || id == "P") && peekNonSpace() == '(') {
          skipSpace();
          ++i_;
          out.push_back(
              {id == "O" ? Tok::kObligOpen : Tok::kPermOpen, id, start});
        } else {
          out.push_back({Tok::kIdent, id, start});
        }
        continue;
      }
      if (c == '?') {
        ++i_;
        if (i_ >= src_.size() ||
            !(std::isalpha(static_cast<unsigned char>(src_[i_])) ||
              src_[i_] == '_')) {
          throw ParseError("expected identifier after '?'", i_);
        }
        std::string id = ident();
        if (!isIdentifier(id)) {
          throw ParseError("reserved name '" + id + "' used as metavariable",
                           start);
        }
        out.push_back({Tok::kMeta, id, start});
        continue;
      }
      if (match("<->")) {
        out.push_back({Tok::kIff, "<->", start});
        continue;
      }
      if (match("<>")) {
        out.push_back({Tok::kDiamond, "<>", start});
        continue;
      }
      if (match("->")) {
        out.push_back({Tok::kImplies, "->", start});
        continue;
      }
      if (match(">=")) {
        out.push_back({Tok::kGeq, ">=", start});
        continue;
      }
      if (match("[]")) {
        out.push_back({Tok::kBox, "[]", start});
        continue;
      }
      ++i_;
      switch (c) {
        case '>':
          out.push_back({Tok::kGt, ">", start});
          break;
        case '(':
          out.push_back({Tok::kLParen, "(", start});
          break;
        case ')':
          out.push_back({Tok::kRParen, ")", start});
          break;
        case '/':
          out.push_back({Tok::kSlash, "/", start});
          break;
        case '~':
          out.push_back({Tok::kNot, "~", start});
          break;
        case '&':
          out.push_back({Tok::kAnd, "&", start});
          break;
        case '|':
          out.push_back({Tok::kOr, "|", start});
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           start);
      }
    }
  }

 private:
  void skipSpace() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_]))) {
      ++i_;
    }
  }
  char peekNonSpace() const {
    std::size_t j = i_;
    while (j < src_.size() && std::isspace(static_cast<unsigned char>(src_[j])))
      ++j;
    return j < src_.size() ? src_[j] : '\0';
  }
  std::string ident() {
    const std::size_t start = i_;
    while (i_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
            src_[i_] == '_')) {
      ++i_;
    }
    return std::string(src_.substr(start, i_ - start));
  }
  bool match(std::string_view lit) {
    if (src_.substr(i_, lit.size()) != lit) return false;
    i_ += lit.size();
    return true;
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parseAll() {
    Formula f = formula();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) {
      fail(std::string("expected ") + what +
           (peek().kind == Tok::kEnd ? " before end of input"
                                     : ", found '" + peek().text + "'"));
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().pos);
  }

  Formula formula() {
    Formula lhs = iff();
    if (accept(Tok::kGeq)) return PrefGeq(std::move(lhs), iff());
    if (accept(Tok::kGt)) return PrefGt(std::move(lhs), iff());
    return lhs;
  }

  Formula iff() {
    Formula f = impl();
    while (accept(Tok::kIff)) f = Iff(std::move(f), impl());
    return f;
  }

  Formula impl() {
    Formula f = disj();
    if (accept(Tok::kImplies)) return Implies(std::move(f), impl());
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::kOr)) f = Or(std::move(f), conj());
    return f;
  }

  Formula conj() {
    Formula f = unaryFormula();
    while (accept(Tok::kAnd)) f = And(std::move(f), unaryFormula());
    return f;
  }

  Formula unaryFormula() {
    if (accept(Tok::kNot)) return Not(unaryFormula());
    if (accept(Tok::kBox)) return Box(unaryFormula());
    if (accept(Tok::kDiamond)) return Diamond(unaryFormula());
    return atomlike();
  }

  Formula atomlike() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::kTop:
        next();
        return Top();
      case Tok::kBot:
        next();
        return Bot();
      case Tok::kIdent:
        next();
        return Atom(t.text);
      case Tok::kMeta:
        next();
        return MetaVar(t.text);
      case Tok::kObligOpen:
      case Tok::kPermOpen: {
        next();
        Formula consequent = formula();
        expect(Tok::kSlash, "'/'");
        Formula antecedent = formula();
        expect(Tok::kRParen, "')'");
        return t.kind == Tok::kObligOpen
                   ? Oblig(std::move(consequent), std::move(antecedent))
                   : Perm(std::move(consequent), std::move(antecedent));
      }
      case Tok::kLParen: {
        next();
        Formula inner = formula();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kEnd:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(std::string_view text) {
  return Parser(Lexer(text).run()).parseAll();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Binding strength; higher binds tighter.
enum Level : int {
  kPrefLevel = 0,
  kIffLevel = 1,
  kImpliesLevel = 2,
  kOrLevel = 3,
  kAndLevel = 4,
  kUnaryLevel = 5,
  kAtomLevel = 6,
};

int levelOf(Connective c) {
  switch (c) {
    case Connective::kPrefGeq:
    case Connective::kPrefGt:
      return kPrefLevel;
    case Connective::kIff:
      return kIffLevel;
    case Connective::kImplies:
      return kImpliesLevel;
    case Connective::kOr:
      return kOrLevel;
    case Connective::kAnd:
      return kAndLevel;
    case Connective::kNot:
    case Connective::kBox:
    case Connective::kDiamond:
      return kUnaryLevel;
    default:
      return kAtomLevel;
  }
}

void print(const Formula& f, int minLevel, std::string& out) {
  const Connective c = f.connective();
  const bool paren = levelOf(c) < minLevel;
  if (paren) out += '(';
  auto infix = [&](const char* op, int left, int right) {
    print(f.operand(0), left, out);
    out += op;
    print(f.operand(1), right, out);
  };
  auto deontic = [&](const char* head) {
    out += head;
    print(f.consequent(), kPrefLevel, out);
    out += " / ";
    print(f.antecedent(), kPrefLevel, out);
    out += ')';
  };
  switch (c) {
    case Connective::kAtom:
      out += f.name();
      break;
    case Connective::kMetaVar:
      out += '?';
      out += f.name();
      break;
    case Connective::kTop:
      out += 'T';
      break;
    case Connective::kBot:
      out += 'F';
      break;
    case Connective::kNot:
      out += '~';
      print(f.operand(0), kUnaryLevel, out);
      break;
    case Connective::kBox:
      out += "[]";
      print(f.operand(0), kUnaryLevel, out);
      break;
    case Connective::kDiamond:
      out += "<>";
      print(f.operand(0), kUnaryLevel, out);
      break;
    case Connective::kAnd:
      infix(" & ", kAndLevel, kAndLevel + 1);
      break;
    case Connective::kOr:
      infix(" | ", kOrLevel, kOrLevel + 1);
      break;
    case Connective::kImplies:
      infix(" -> ", kImpliesLevel + 1, kImpliesLevel);
      break;
    case Connective::kIff:
      infix(" <-> ", kIffLevel, kIffLevel + 1);
      break;
    case Connective::kPrefGeq:
      infix(" >= ", kIffLevel, kIffLevel);
      break;
    case Connective::kPrefGt:
      infix(" > ", kIffLevel, kIffLevel);
      break;
    case Connective::kOblig:
      deontic("O(");
      break;
    case Connective::kPerm:
      deontic("P(");
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  print(f, kPrefLevel, out);
  return out;
}

// ---------------------------------------------------------------------------
// Expansion and traversal

Formula expand(const Formula& f) {
  auto arg = [&](std::size_t i) { return expand(f.operand(i)); };
  switch (f.connective()) {
    case Connective::kAtom:
    case Connective::kMetaVar:
    case Connective::kTop:
      return f;
    case Connective::kBot:
      return Not(Top());
    case Connective::kNot:
      return Not(arg(0));
    case Connective::kOr:
      return Or(arg(0), arg(1));
    case Connective::kAnd:
      return Not(Or(Not(arg(0)), Not(arg(1))));
    case Connective::kImplies:
      return Or(Not(arg(0)), arg(1));
    case Connective::kIff:
      return expand(And(Implies(f.operand(0), f.operand(1)),
                        Implies(f.operand(1), f.operand(0))));
    case Connective::kBox:
      return Box(arg(0));
    case Connective::kDiamond:
      return Not(Box(Not(arg(0))));
    case Connective::kOblig:
      return Oblig(arg(0), arg(1));
    case Connective::kPerm:
      return Not(Oblig(Not(arg(0)), arg(1)));
    case Connective::kPrefGeq:
      return expand(Perm(f.operand(0), Or(f.operand(0), f.operand(1))));
    case Connective::kPrefGt: {
      Formula both = Or(f.operand(0), f.operand(1));
      return expand(
          And(Perm(f.operand(0), both), Oblig(Not(f.operand(1)), both)));
    }
  }
  throw std::logic_error("unhandled connective");
}

namespace {

void collect(const Formula& f, Connective kind, std::set<std::string>& out) {
  if (f.connective() == kind) out.insert(f.name());
  for (const Formula& op : f.operands()) collect(op, kind, out);
}

}  // namespace

std::set<std::string> metavars(const Formula& f) {
  std::set<std::string> out;
  collect(f, Connective::kMetaVar, out);
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect(f, Connective::kAtom, out);
  return out;
}

Formula metavarsToAtoms(const Formula& f) {
  if (f.connective() == Connective::kMetaVar) return Atom(f.name());
  if (f.arity() == 0) return f;
  std::vector<Formula> ops;
  ops.reserve(f.arity());
  for (const Formula& op : f.operands()) ops.push_back(metavarsToAtoms(op));
  return Formula::make(f.connective(), {}, std::move(ops));
}

int depth(const Formula& f) {
  int d = 0;
  for (const Formula& op : f.operands()) d = std::max(d, depth(op) + 1);
  return d;
}

}  // namespace ddl
