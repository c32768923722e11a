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

#include "ddl/model.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ddl/errors.hpp"
#include "ddl/formula.hpp"

namespace ddl {

std::string toString(WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (int w : s) {
    if (!first) out += ',';
    out += std::to_string(w);
    first = false;
  }
  out += '}';
  return out;
}

Relation::Relation(int n) : n_(n) {
  if (n < 1 || n > kMaxWorlds) {
    throw std::invalid_argument("world count must be in [1, 16], got " +
                                std::to_string(n));
  }
}

Relation Relation::fromPairs(int n,
                             const std::vector<std::pair<int, int>>& pairs) {
  Relation rel(n);
  for (auto [i, j] : pairs) rel.set(i, j);
  return rel;
}

Relation Relation::identity(int n) {
  Relation rel(n);
  for (int i = 0; i < n; ++i) rel.set(i, i);
  return rel;
}

Relation Relation::full(int n) {
  Relation rel(n);
  for (int i = 0; i < n; ++i)
    rel.rows_[i] = static_cast<std::uint16_t>(rel.universe().mask());
  return rel;
}

Relation Relation::fromCode(int n, std::uint64_t code) {
  if (n > 8) throw std::invalid_argument("codes cover at most 8 worlds");
  Relation rel(n);
  const std::uint64_t rowMask = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    rel.rows_[i] = static_cast<std::uint16_t>((code >> (i * n)) & rowMask);
  }
  return rel;
}

std::uint64_t Relation::code() const {
  if (n_ > 8) throw std::invalid_argument("codes cover at most 8 worlds");
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i) {
    code |= static_cast<std::uint64_t>(rows_[i]) << (i * n_);
  }
  return code;
}

void Relation::set(int i, int j, bool value) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw std::out_of_range("world index out of range");
  }
  if (value) {
    rows_[i] |= static_cast<std::uint16_t>(1u << j);
  } else {
    rows_[i] &= static_cast<std::uint16_t>(~(1u << j));
  }
}

WorldSet Relation::column(int j) const {
  WorldSet col;
  for (int i = 0; i < n_; ++i) {
    if (holds(i, j)) col.insert(i);
  }
  return col;
}

Relation Relation::transpose() const {
  Relation t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j : row(i)) t.set(j, i);
  }
  return t;
}

bool Relation::empty() const {
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j : row(i)) out.emplace_back(i, j);
  }
  return out;
}

Relation operator&(const Relation& a, const Relation& b) {
  Relation out(a.n_);
  for (int i = 0; i < a.n_; ++i) out.rows_[i] = a.rows_[i] & b.rows_[i];
  return out;
}

Relation operator|(const Relation& a, const Relation& b) {
  Relation out(a.n_);
  for (int i = 0; i < a.n_; ++i) out.rows_[i] = a.rows_[i] | b.rows_[i];
  return out;
}

std::string toString(const Relation& rel) {
  std::string out;
  for (auto [i, j] : rel.pairs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + ">=" + std::to_string(j);
  }
  return out;
}

PreferenceModel::PreferenceModel(Relation betterness, Valuation valuation)
    : betterness_(std::move(betterness)), valuation_(std::move(valuation)) {
  for (const auto& [atom, set] : valuation_) {
    if (!isIdentifier(atom)) {
      throw std::invalid_argument("bad atom name '" + atom + "'");
    }
    if (!set.isSubsetOf(universe())) {
      throw std::invalid_argument("valuation of '" + atom +
                                  "' leaves the universe");
    }
  }
}

std::optional<WorldSet> PreferenceModel::lookup(std::string_view atom) const {
  auto it = valuation_.find(atom);
  if (it == valuation_.end()) return std::nullopt;
  return it->second;
}

Relation strictPart(const Relation& betterness) {
  Relation strict(betterness.size());
  for (int i = 0; i < betterness.size(); ++i) {
    for (int j : betterness.row(i) - betterness.column(i)) strict.set(i, j);
  }
  return strict;
}

Relation strictPart(const PreferenceModel& m) {
  return strictPart(m.betterness());
}

Relation equalGoodness(const Relation& betterness) {
  return betterness & betterness.transpose();
}

Relation equalGoodness(const PreferenceModel& m) {
  return equalGoodness(m.betterness());
}

Relation transitiveClosure(const Relation& rel) {
  Relation closure = rel;
  const int n = rel.size();
  for (int k = 0; k < n; ++k) {
    const WorldSet viaK = closure.row(k);
    for (int i = 0; i < n; ++i) {
      if (closure.holds(i, k)) {
        for (int j : viaK) closure.set(i, j);
      }
    }
  }
  return closure;
}

// ---------------------------------------------------------------------------
// Model files

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> splitWords(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

int parseIndex(std::string_view s, int n, int line) {
  s = trim(s);
  int value = -1;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ModelFormatError("bad world index '" + std::string(s) + "'", line);
  }
  if (value < 0 || value >= n) {
    throw ModelFormatError("world index " + std::string(s) +
                               " out of range for " + std::to_string(n) +
                               " worlds",
                           line);
  }
  return value;
}

// Strips comments and blank lines, keeping 1-based line numbers.
std::vector<std::pair<int, std::string_view>> contentLines(
    std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

PreferenceModel parseModel(std::string_view text) {
  const auto lines = contentLines(text);
  if (lines.empty()) throw ModelFormatError("missing 'worlds' header", 1);

  auto [headerLine, header] = lines[0];
  const auto headerWords = splitWords(header);
  if (headerWords.size() != 2 || headerWords[0] != "worlds") {
    throw ModelFormatError("expected 'worlds <n>'", headerLine);
  }
  int n = 0;
  {
    auto w = headerWords[1];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), n);
    if (ec != std::errc() || ptr != w.data() + w.size() || n < 1 ||
        n > kMaxWorlds) {
      throw ModelFormatError("world count must be an integer in [1, 16]",
                             headerLine);
    }
  }

  if (lines.size() < 2)
    throw ModelFormatError("missing 'rel' line", headerLine);
  auto [relLine, relText] = lines[1];
  const auto relWords = splitWords(relText);
  if (relWords.empty() || relWords[0] != "rel") {
    throw ModelFormatError("expected 'rel' line", relLine);
  }
  Relation rel(n);
  for (std::size_t k = 1; k < relWords.size(); ++k) {
    const auto pair = relWords[k];
    const auto op = pair.find(">=");
    if (op == std::string_view::npos) {
      throw ModelFormatError(
          "expected pair 'i>=j', got '" + std::string(pair) + "'", relLine);
    }
    rel.set(parseIndex(pair.substr(0, op), n, relLine),
            parseIndex(pair.substr(op + 2), n, relLine));
  }

  Valuation valuation;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    auto [number, line] = lines[k];
    if (line.substr(0, 3) != "val" ||
        (line.size() > 3 && line[3] != ' ' && line[3] != '\t')) {
      throw ModelFormatError("expected 'val <atom> = {...}'", number);
    }
    std::string_view rest = trim(line.substr(3));
    if (rest.empty()) continue;
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) {
      throw ModelFormatError("expected '=' in valuation", number);
    }
    const std::string atom(trim(rest.substr(0, eq)));
    if (!isIdentifier(atom)) {
      throw ModelFormatError("bad atom name '" + atom + "'", number);
    }
    if (valuation.count(atom) != 0) {
      throw ModelFormatError("duplicate atom '" + atom + "'", number);
    }
    std::string_view set = trim(rest.substr(eq + 1));
    if (set.size() < 2 || set.front() != '{' || set.back() != '}') {
      throw ModelFormatError("expected a set '{i,j,...}'", number);
    }
    set = trim(set.substr(1, set.size() - 2));
    WorldSet worlds;
    std::size_t i = 0;
    while (!set.empty() && i <= set.size()) {
      std::size_t comma = set.find(',', i);
      if (comma == std::string_view::npos) comma = set.size();
      worlds.insert(parseIndex(set.substr(i, comma - i), n, number));
      i = comma + 1;
    }
    valuation.emplace(atom, worlds);
  }
  return PreferenceModel(rel, std::move(valuation));
}

std::string serializeModel(const PreferenceModel& m) {
  std::string out = "worlds " + std::to_string(m.size()) + "\nrel";
  for (auto [i, j] : m.betterness().pairs()) {
    out += ' ' + std::to_string(i) + ">=" + std::to_string(j);
  }
  out += '\n';
  for (const auto& [atom, set] : m.valuation()) {
    out += "val " + atom + " = " + toString(set) + '\n';
  }
  return out;
}

}  // namespace ddl
