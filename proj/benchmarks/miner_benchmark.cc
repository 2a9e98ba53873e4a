// Copyright 2026 The fairnb Authors
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

#include "bench_models.h"
#include "fairnb/miner.h"

namespace fairnb {
namespace {

void BM_MineAll(benchmark::State& state) {
  const NaiveBayesModel m =
      bench::RandomModel(static_cast<int>(state.range(0)), 3, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(MineAll(m, 0.1));
}
BENCHMARK(BM_MineAll)->Arg(6)->Arg(9)->Arg(12);

void BM_MineTopK(benchmark::State& state) {
  const NaiveBayesModel m = bench::RandomModel(13, 4, 2, 2);
  const Ranking r =
      state.range(0) ? Ranking::kDivergence : Ranking::kDiscrimination;
  for (auto _ : state) benchmark::DoNotOptimize(MineTopK(m, 0.05, 10, r));
}
BENCHMARK(BM_MineTopK)->Arg(0)->Arg(1);

void BM_Verify(benchmark::State& state) {
  const NaiveBayesModel m = bench::RandomModel(13, 4, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(VerifyFair(m, 0.05));
}
BENCHMARK(BM_Verify);

void BM_BruteForce(benchmark::State& state) {
  const NaiveBayesModel m =
      bench::RandomModel(static_cast<int>(state.range(0)), 3, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(BruteForcePatterns(m, 0.1));
}
BENCHMARK(BM_BruteForce)->Arg(6)->Arg(9);

}  // namespace
}  // namespace fairnb

BENCHMARK_MAIN();
