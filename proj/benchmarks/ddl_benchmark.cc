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

#include <benchmark/benchmark.h>

#include "ddl/casestudy.hpp"
#include "ddl/finder.hpp"
#include "ddl/model.hpp"
#include "ddl/relprops.hpp"
#include "ddl/schemas.hpp"
#include "ddl/semantics.hpp"

namespace ddl {
namespace {

void BM_TransitiveClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Relation chain(n);
  for (int i = 0; i + 1 < n; ++i) chain.set(i + 1, i);
  for (auto _ : state) benchmark::DoNotOptimize(transitiveClosure(chain));
}
BENCHMARK(BM_TransitiveClosure)->Arg(4)->Arg(8)->Arg(16);

void BM_CondHolds(benchmark::State& state) {
  const auto rule = static_cast<EvalRule>(state.range(0));
  const Relation frame = Relation::fromCode(4, 0xb3d5);
  const FrameView view(frame);
  for (auto _ : state) {
    int count = 0;
    for (WorldSet::Mask x = 0; x < 16; ++x) {
      for (WorldSet::Mask y = 0; y < 16; ++y) {
        count += condHolds(rule, WorldSet(y), WorldSet(x), view);
      }
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CondHolds)->DenseRange(0, 2);

// Frame validity of a three-metavariable schema: 2^(3n) assignments.
void BM_FrameValidity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Relation frame = Relation::full(n);
  const Formula cm = findAxiom("CM").formula;
  for (auto _ : state) {
    benchmark::DoNotOptimize(validOnFrame(cm, frame, EvalRule::kMax));
  }
}
BENCHMARK(BM_FrameValidity)->DenseRange(2, 4);

void BM_CheckAllProperties(benchmark::State& state) {
  const Relation frame = Relation::fromCode(4, 0x8421 | 0x1248);
  PropertySet all;
  for (RelationProperty p : allProperties()) all.insert(p);
  for (auto _ : state) {
    for (RelationProperty p : allProperties()) {
      benchmark::DoNotOptimize(checkProperty(p, frame));
    }
  }
}
BENCHMARK(BM_CheckAllProperties);

void BM_EnumerateCanonicalFrames(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerateFrames(n, {}, /*isoReject=*/true));
  }
}
BENCHMARK(BM_EnumerateCanonicalFrames)
    ->DenseRange(2, 4)
    ->Unit(benchmark::kMillisecond);

// One unsatisfiable cell of the mere addition grid.
void BM_GridCellTransitiveMax(benchmark::State& state) {
  SearchOptions options;
  options.isoReject = state.range(1) != 0;
  for (auto _ : state) {
    auto f = mere_addition::investigate(
        "transitivity", {0, 1, 2, 3, 4}, {RelationProperty::kTransitive},
        EvalRule::kMax, static_cast<int>(state.range(0)), options);
    benchmark::DoNotOptimize(f.result.status);
  }
}
BENCHMARK(BM_GridCellTransitiveMax)
    ->Args({3, 0})
    ->Args({4, 0})
    ->Args({4, 1})
    ->Unit(benchmark::kMillisecond);

void BM_TableSweep(benchmark::State& state) {
  const auto rule = static_cast<EvalRule>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tableSweep(rule, 3).rows.size());
  }
}
BENCHMARK(BM_TableSweep)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ddl

BENCHMARK_MAIN();
