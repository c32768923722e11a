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

#include "ddl/finder.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace ddl {

Deadline::Deadline(std::chrono::milliseconds budget) {
  if (budget.count() > 0) at_ = std::chrono::steady_clock::now() + budget;
}

bool Deadline::expired() const {
  return at_ && std::chrono::steady_clock::now() >= *at_;
}

namespace {

using Permutation = std::array<int, kMaxSearchWorlds>;

const std::vector<Permutation>& permutations(int n) {
  static const auto kTable = [] {
    std::array<std::vector<Permutation>, kMaxSearchWorlds + 1> table;
    for (int size = 1; size <= kMaxSearchWorlds; ++size) {
      Permutation p{};
      std::iota(p.begin(), p.begin() + size, 0);
      do {
        table[size].push_back(p);
      } while (std::next_permutation(p.begin(), p.begin() + size));
    }
    return table;
  }();
  return kTable.at(n);
}

std::uint64_t permutedCode(const Relation& rel, const Permutation& p) {
  const int n = rel.size();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j : rel.row(i)) {
      code |= std::uint64_t{1} << (p[i] * n + p[j]);
    }
  }
  return code;
}

}  // namespace

bool isCanonical(const Relation& frame) {
  const std::uint64_t code = frame.code();
  for (const Permutation& p : permutations(frame.size())) {
    if (permutedCode(frame, p) < code) return false;
  }
  return true;
}

std::uint64_t orbitSize(const Relation& frame) {
  const std::uint64_t code = frame.code();
  const auto& perms = permutations(frame.size());
  std::uint64_t automorphisms = 0;
  for (const Permutation& p : perms) {
    if (permutedCode(frame, p) == code) ++automorphisms;
  }
  return perms.size() / automorphisms;
}

bool FrameFilter::accepts(const Relation& frame) const {
  if (!checkAll(required, frame)) return false;
  for (RelationProperty p : excluded.members()) {
    if (checkProperty(p, frame)) return false;
  }
  return !isoReject || isCanonical(frame);
}

void forEachFrame(int n, const FrameFilter& filter,
                  const std::function<void(const Relation&)>& visit) {
  if (n < 1 || n > kMaxSearchWorlds) {
    throw std::invalid_argument("frame size out of range: " +
                                std::to_string(n));
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Relation frame = Relation::fromCode(n, code);
    if (filter.accepts(frame)) visit(frame);
  }
}

std::vector<Relation> enumerateFrames(int n, PropertySet props,
                                      bool isoReject) {
  std::vector<Relation> out;
  forEachFrame(n, FrameFilter{props, {}, isoReject},
               [&](const Relation& r) { out.push_back(r); });
  return out;
}

std::string_view statusName(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "sat";
    case SearchStatus::kExhausted:
      return "unsat_up_to_bound";
    case SearchStatus::kTimedOut:
      return "timeout";
  }
  return "?";
}

std::uint64_t SearchResult::framesChecked() const {
  std::uint64_t total = 0;
  for (const auto& s : sizes) total += s.frames;
  return total;
}

std::uint64_t SearchResult::modelsChecked() const {
  std::uint64_t total = 0;
  for (const auto& s : sizes) total += s.models;
  return total;
}

namespace {

std::vector<std::string> resolvedAtoms(const SearchSpec& spec) {
  if (!spec.atoms.empty()) return spec.atoms;
  std::set<std::string> names;
  for (const Formula& t : spec.targets) names.merge(atoms(t));
  return {names.begin(), names.end()};
}

}  // namespace

void validateSpec(const SearchSpec& spec) {
  if (spec.targets.empty()) throw std::invalid_argument("no target formulas");
  if (spec.minN < 1 || spec.minN > spec.maxN || spec.maxN > kMaxSearchWorlds) {
    throw std::invalid_argument(
        "search bounds must satisfy 1 <= min <= max <= " +
        std::to_string(kMaxSearchWorlds));
  }
  const auto searched = resolvedAtoms(spec);
  if (searched.size() > 8)
    throw std::invalid_argument("at most 8 searched atoms");
  if (std::set<std::string>(searched.begin(), searched.end()).size() !=
      searched.size()) {
    throw std::invalid_argument("duplicate searched atom");
  }
  for (const Formula& t : spec.targets) {
    if (!metavars(t).empty()) {
      throw std::invalid_argument("target has metavariables: " + render(t));
    }
    for (const std::string& a : atoms(t)) {
      if (std::find(searched.begin(), searched.end(), a) == searched.end()) {
        throw std::invalid_argument("target atom '" + a +
                                    "' is not among the searched atoms");
      }
    }
  }
}

SearchResult findSatisfyingModel(const SearchSpec& spec,
                                 const SearchOptions& options) {
  validateSpec(spec);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> atomNames = resolvedAtoms(spec);
  const std::size_t k = atomNames.size();

  std::vector<CompiledFormula> targets;
  for (const Formula& t : spec.targets) targets.emplace_back(t, atomNames);
  // byLevel[L]: satisfy-mode targets that can be decided once the first L
  // atoms are fixed.
  std::vector<std::vector<const CompiledFormula*>> byLevel(k + 1);
  for (const auto& t : targets) byLevel[t.maxSlot() + 1].push_back(&t);

  const bool satisfy = spec.mode == SearchMode::kSatisfy;
  const Deadline deadline(options.timeout);
  const FrameFilter filter{spec.properties, spec.excluded, options.isoReject};

  auto visit =
      [&](const Relation& frame,
          std::uint64_t& models) -> std::optional<std::vector<WorldSet>> {
    const FrameView view(frame);
    const WorldSet all = frame.universe();
    const WorldSet::Mask last = all.mask();
    std::vector<WorldSet> values(std::max<std::size_t>(k, 1));

    auto passes = [&](std::size_t level) {
      for (const CompiledFormula* t : byLevel[level]) {
        if (t->evaluate(view, values, spec.rule) != all) return false;
      }
      return true;
    };
    auto refuted = [&] {
      for (const auto& t : targets) {
        if (t.evaluate(view, values, spec.rule) != all) return true;
      }
      return false;
    };
    // Depth-first over atoms; atom 0 is the outermost loop.
    // A pruned partial valuation counts for every completion it rules out.
    auto dfs = [&](auto&& self, std::size_t level) -> bool {
      if (satisfy && !passes(level)) {
        models += std::uint64_t{1} << (frame.size() * (k - level));
        return false;
      }
      if (level == k) {
        ++models;
        return satisfy || refuted();
      }
      for (WorldSet::Mask m = 0; m <= last; ++m) {
        values[level] = WorldSet(m);
        if (self(self, level + 1)) return true;
      }
      return false;
    };
    if (dfs(dfs, 0)) return values;
    return std::nullopt;
  };

  SearchResult result;
  result.bound = spec.maxN;
  for (int n = spec.minN; n <= spec.maxN; ++n) {
    auto scan =
        scanFrames<std::vector<WorldSet>>(n, filter, options, deadline, visit);
    result.sizes.push_back({n, scan.frames, scan.work});
    if (scan.timedOut) {
      result.status = SearchStatus::kTimedOut;
      break;
    }
    if (scan.frame) {
      Valuation valuation;
      for (std::size_t i = 0; i < k; ++i) {
        valuation.emplace(atomNames[i], (*scan.payload)[i]);
      }
      result.model = PreferenceModel(*scan.frame, std::move(valuation));
      result.status = SearchStatus::kFound;
      break;
    }
  }
  result.elapsedMs = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return result;
}

StrictChain longestStrictChain(const Relation& betterness) {
  const Relation strict = strictPart(betterness);
  const Relation reach = transitiveClosure(strict);
  const int n = betterness.size();
  for (int a = 0; a < n; ++a) {
    if (reach.holds(a, a)) return {true, 0};
  }
  // Acyclic: longest path by memoized depth-first search.
  std::vector<int> memo(n, 0);
  auto longestFrom = [&](auto&& self, int a) -> int {
    if (memo[a] != 0) return memo[a];
    int best = 1;
    for (int b : strict.row(a)) best = std::max(best, 1 + self(self, b));
    return memo[a] = best;
  };
  int best = 0;
  for (int a = 0; a < n; ++a)
    best = std::max(best, longestFrom(longestFrom, a));
  return {false, best};
}

StrictChain longestStrictChain(const PreferenceModel& m) {
  return longestStrictChain(m.betterness());
}

}  // namespace ddl
