// Copyright 2026 The circperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "circperm/extensions.h"
#include "circperm/oracle.h"
#include "circperm/pipeline.h"
#include "circperm/recurrence.h"
#include "circperm/spec.h"
#include "circperm/transfer.h"

namespace circperm {
namespace {

void BM_Ryser(benchmark::State& state) {
  const CirculantSpec spec = Normalize(ParseSpec("0,1,2"));
  const RationalMatrix m = AdjacencyMatrix(spec, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RyserPermanent(m));
}
BENCHMARK(BM_Ryser)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_Derive(benchmark::State& state, const char* jumps, const char* size) {
  const CirculantSpec spec = ParseSpec(jumps, size);
  for (auto _ : state) benchmark::DoNotOptimize(Derive(spec));
}
BENCHMARK_CAPTURE(BM_Derive, s3, "0,1,2", "")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Derive, s4, "0,1,2,3", "")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Derive, linear3n, "0,n,2n-1", "3n")->Unit(benchmark::kMillisecond);

void BM_Sequence(benchmark::State& state) {
  const DeriveResult d = Derive(ParseSpec("0,1,3"));
  const int64_t from = d.system.n0;
  for (auto _ : state) benchmark::DoNotOptimize(Sequence(d.system, from, from + state.range(0)));
}
BENCHMARK(BM_Sequence)->Arg(50)->Arg(200);

void BM_EvalRecurrence(benchmark::State& state) {
  const DeriveResult d = Derive(ParseSpec("0,1,2"));
  for (auto _ : state) benchmark::DoNotOptimize(EvalRecurrence(d.recurrence, state.range(0)));
}
BENCHMARK(BM_EvalRecurrence)->Arg(100)->Arg(10000);

void BM_Moments(benchmark::State& state) {
  const CirculantSpec spec = ParseSpec("-1,0,1");
  for (auto _ : state) benchmark::DoNotOptimize(MomentsDerive(spec, 1));
}
BENCHMARK(BM_Moments)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace circperm

BENCHMARK_MAIN();
