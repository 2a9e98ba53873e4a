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

#ifndef FAIRNB_BENCHMARKS_BENCH_MODELS_H_
#define FAIRNB_BENCHMARKS_BENCH_MODELS_H_

#include <random>
#include <string>
#include <vector>

#include "fairnb/model.h"
#include "fairnb/schema.h"

namespace fairnb::bench {

// Random model over one binary decision and `features` features of the given
// arity; the first `sensitive` features are sensitive.
inline NaiveBayesModel RandomModel(int features, int sensitive, int arity,
                                   unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<Variable> vars{{"D", {"d", "dbar"}}};
  std::vector<VarIndex> sens;
  for (int i = 0; i < features; ++i) {
    Variable v{"F" + std::to_string(i), {}};
    for (int z = 0; z < arity; ++z) v.values.push_back(std::to_string(z));
    vars.push_back(v);
    if (i < sensitive) sens.push_back(i + 1);
  }
  Schema schema(vars, 0, 0, sens);
  std::vector<ClassTable> cpts(vars.size());
  for (int v = 1; v <= features; ++v) {
    for (auto& col : cpts[v]) {
      double sum = 0.0;
      for (int z = 0; z < arity; ++z) {
        col.push_back(u(rng));
        sum += col.back();
      }
      for (double& p : col) p /= sum;
    }
  }
  return NaiveBayesModel(schema,
                         std::uniform_real_distribution<double>(0.2, 0.8)(rng),
                         std::move(cpts));
}

}  // namespace fairnb::bench

#endif  // FAIRNB_BENCHMARKS_BENCH_MODELS_H_
