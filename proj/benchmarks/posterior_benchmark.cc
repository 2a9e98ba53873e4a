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
#include "fairnb/bounds.h"
#include "fairnb/model.h"

namespace fairnb {
namespace {

void BM_Posterior(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NaiveBayesModel m = bench::RandomModel(n, 2, 3, 4);
  Assignment e;
  for (int v = 1; v <= n; v += 2) e.Bind(v, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Posterior(m, e));
}
BENCHMARK(BM_Posterior)->Arg(4)->Arg(16)->Arg(64);

void BM_DiscriminationScore(benchmark::State& state) {
  const NaiveBayesModel m = bench::RandomModel(10, 3, 3, 5);
  const Assignment x{{1, 0}, {2, 1}};
  const Assignment y{{5, 2}, {7, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(DiscriminationScore(m, x, y));
}
BENCHMARK(BM_DiscriminationScore);

void BM_DivergenceScore(benchmark::State& state) {
  const NaiveBayesModel m = bench::RandomModel(10, 3, 3, 6);
  const Assignment x{{1, 0}};
  const Assignment y{{5, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(DivergenceScore(m, x, y, 0.01));
}
BENCHMARK(BM_DivergenceScore);

void BM_DiscriminationBound(benchmark::State& state) {
  const NaiveBayesModel m = bench::RandomModel(12, 4, 2, 7);
  const Assignment x{{1, 0}};
  const Assignment y{{6, 1}};
  for (auto _ : state)
    benchmark::DoNotOptimize(DiscriminationBound(m, x, y, {}));
}
BENCHMARK(BM_DiscriminationBound);

}  // namespace
}  // namespace fairnb

BENCHMARK_MAIN();
