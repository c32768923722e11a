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

// Exhaustive enumeration of frames and models, with property filters,
// optional isomorph rejection and deterministic parallel search.

#ifndef DDL_FINDER_HPP_
#define DDL_FINDER_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ddl/formula.hpp"
#include "ddl/model.hpp"
#include "ddl/relprops.hpp"
#include "ddl/semantics.hpp"

namespace ddl {

// Frames are enumerated by ascending Relation::code(), which caps the
// exhaustive search at 5 worlds (2^25 candidate relations).
inline constexpr int kMaxSearchWorlds = 5;

struct SearchOptions {
  // Keep only the lowest-code frame of each world-permutation orbit.
  bool isoReject = false;
  unsigned workers = 1;
  // Zero means no limit.
  std::chrono::milliseconds timeout{0};
};

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget);
  bool expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct FrameFilter {
  PropertySet required;
  // Every property listed here must fail.
  PropertySet excluded;
  bool isoReject = false;

  bool accepts(const Relation& frame) const;
};

// True iff no permutation of the worlds yields a lower code.
bool isCanonical(const Relation& frame);
// Number of distinct relations obtained by permuting the worlds.
std::uint64_t orbitSize(const Relation& frame);

// Visits every frame on n worlds (1 <= n <= kMaxSearchWorlds) accepted by
// the filter, in ascending code order.
void forEachFrame(int n, const FrameFilter& filter,
                  const std::function<void(const Relation&)>& visit);
std::vector<Relation> enumerateFrames(int n, PropertySet props,
                                      bool isoReject = false);

// Result of scanning one frame size for the first frame the visitor
// accepts. Counts cover every accepted frame up to and including the hit,
// so they do not depend on the number of workers.
template <class Payload>
struct FrameScan {
  std::optional<Relation> frame;
  std::optional<Payload> payload;
  std::uint64_t frames = 0;
  std::uint64_t work = 0;
  bool timedOut = false;
};

namespace detail {

inline constexpr std::uint64_t kChunkCodes = 1u << 12;

template <class Payload>
struct ChunkResult {
  std::optional<std::uint64_t> hitCode;
  std::optional<Payload> payload;
  std::uint64_t frames = 0;
  std::uint64_t work = 0;
  bool timedOut = false;
  bool skipped = false;
};

}  // namespace detail

// Scans frames on n worlds in code order and returns the first one for
// which `visit(frame, work)` yields a payload. The visitor adds whatever
// unit of effort it wants reported to `work` and must be safe to call
// concurrently.
template <class Payload, class Visitor>
FrameScan<Payload> scanFrames(int n, const FrameFilter& filter,
                              const SearchOptions& options,
                              const Deadline& deadline, Visitor&& visit) {
  if (n < 1 || n > kMaxSearchWorlds) {
    throw std::invalid_argument("frame size out of range: " +
                                std::to_string(n));
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const std::uint64_t numChunks =
      (total + detail::kChunkCodes - 1) / detail::kChunkCodes;
  std::vector<detail::ChunkResult<Payload>> chunks(numChunks);
  std::atomic<std::uint64_t> nextChunk{0};
  std::atomic<std::uint64_t> firstHit{numChunks};
  std::atomic<bool> aborted{false};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = nextChunk.fetch_add(1);
      if (c >= numChunks) return;
      auto& out = chunks[c];
      if (c > firstHit.load() || aborted.load()) {
        out.skipped = true;
        continue;
      }
      const std::uint64_t lo = c * detail::kChunkCodes;
      const std::uint64_t hi = std::min(total, lo + detail::kChunkCodes);
      for (std::uint64_t code = lo; code < hi; ++code) {
        if ((code & 0xff) == 0 && deadline.expired()) {
          out.timedOut = true;
          aborted.store(true);
          break;
        }
        const Relation frame = Relation::fromCode(n, code);
        if (!filter.accepts(frame)) continue;
        ++out.frames;
        std::optional<Payload> hit = visit(frame, out.work);
        if (hit) {
          out.hitCode = code;
          out.payload = std::move(hit);
          std::uint64_t seen = firstHit.load();
          while (c < seen && !firstHit.compare_exchange_weak(seen, c)) {
          }
          break;
        }
      }
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || numChunks == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  FrameScan<Payload> scan;
  // Chunks before the first hit are never skipped unless the deadline hit.
  for (auto& chunk : chunks) {
    if (chunk.timedOut || chunk.skipped) {
      scan.timedOut = true;
      break;
    }
    scan.frames += chunk.frames;
    scan.work += chunk.work;
    if (chunk.hitCode) {
      scan.frame = Relation::fromCode(n, *chunk.hitCode);
      scan.payload = std::move(chunk.payload);
      break;
    }
  }
  return scan;
}

enum class SearchMode : std::uint8_t {
  kSatisfy,  // every target true at every world
  kRefute,   // some target false at some world
};

struct SearchSpec {
  int minN = 1;
  int maxN = kMaxSearchWorlds;
  PropertySet properties;
  // Properties the relation must lack.
  PropertySet excluded;
  EvalRule rule = EvalRule::kMax;
  // Metavariable-free formulas.
  std::vector<Formula> targets;
  SearchMode mode = SearchMode::kSatisfy;
  // Atoms whose valuations are searched; each ranges over all 2^n subsets.
  // When empty, the atoms of the targets in name order. Atoms outside this
  // list denote the empty set.
  std::vector<std::string> atoms;
};

enum class SearchStatus : std::uint8_t { kFound, kExhausted, kTimedOut };

std::string_view statusName(SearchStatus s);

struct SizeStats {
  int n = 0;
  std::uint64_t frames = 0;
  // Valuations decided, including those ruled out by pruning a partial one.
  std::uint64_t models = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  // Smallest model: fewest worlds, then lowest relation code, then lowest
  // valuation (first atom most significant).
  std::optional<PreferenceModel> model;
  // One entry per size scanned, in increasing n.
  std::vector<SizeStats> sizes;
  int bound = 0;
  double elapsedMs = 0;

  bool found() const { return status == SearchStatus::kFound; }
  std::uint64_t framesChecked() const;
  std::uint64_t modelsChecked() const;
};

// Throws std::invalid_argument for an ill-formed spec.
void validateSpec(const SearchSpec& spec);

SearchResult findSatisfyingModel(const SearchSpec& spec,
                                 const SearchOptions& options = {});

struct StrictChain {
  bool cyclic = false;
  // Worlds on the longest repetition-free strict path; meaningless when
  // cyclic.
  int length = 0;

  friend bool operator==(const StrictChain&, const StrictChain&) = default;
};

StrictChain longestStrictChain(const Relation& betterness);
StrictChain longestStrictChain(const PreferenceModel& m);

}  // namespace ddl

#endif  // DDL_FINDER_HPP_
