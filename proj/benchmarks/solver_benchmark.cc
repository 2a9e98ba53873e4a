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

#include <random>

#include "bench_models.h"
#include "fairnb/estimation.h"
#include "fairnb/learner.h"
#include "fairnb/sp_solver.h"
#include "fairnb/statistics.h"

namespace fairnb {
namespace {

SufficientStatistics RandomCounts(const Schema& schema, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(1, 200);
  SufficientStatistics s = SufficientStatistics::Zeros(schema);
  s.decision = {0.0, 0.0};
  for (VarIndex v : schema.features()) {
    for (int d = 0; d < 2; ++d) {
      double total = 0.0;
      for (double& n : s.features[v][d]) total += (n = c(rng));
      s.decision[d] = total;
    }
  }
  return s;
}

void BM_SolveUnconstrained(benchmark::State& state) {
  const NaiveBayesModel m =
      bench::RandomModel(static_cast<int>(state.range(0)), 2, 2, 8);
  const SufficientStatistics counts = RandomCounts(m.schema(), 9);
  const ParameterIndex index(m.schema());
  const SignomialProgram program = BuildProgram(m.schema(), counts, {});
  const std::vector<double> init = ModelParameters(m, index);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(program, init));
}
BENCHMARK(BM_SolveUnconstrained)->Arg(4)->Arg(8);

void BM_SolveConstrained(benchmark::State& state) {
  const NaiveBayesModel m = bench::RandomModel(6, 2, 2, 10);
  const SufficientStatistics counts = RandomCounts(m.schema(), 11);
  const ParameterIndex index(m.schema());
  const FairnessConstraint c =
      CompileConstraint(m.schema(), index, Assignment{{1, 0}}, {}, 0.01);
  const SignomialProgram program = BuildProgram(m.schema(), counts, {c});
  const std::vector<double> init = ModelParameters(m, index);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(program, init));
}
BENCHMARK(BM_SolveConstrained);

void BM_LearnFair(benchmark::State& state) {
  const NaiveBayesModel m = bench::RandomModel(6, 2, 2, 12);
  const SufficientStatistics counts = RandomCounts(m.schema(), 13);
  LearnOptions options;
  options.delta = 0.05;
  for (auto _ : state)
    benchmark::DoNotOptimize(LearnFair(m.schema(), counts, options));
}
BENCHMARK(BM_LearnFair)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fairnb

BENCHMARK_MAIN();
