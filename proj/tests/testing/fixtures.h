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

// Shared models, samplers and direct-space oracles for tests. Oracles avoid
// the library's log-space code paths and work from raw parameter products.

#ifndef FAIRNB_TESTS_TESTING_FIXTURES_H_
#define FAIRNB_TESTS_TESTING_FIXTURES_H_

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "fairnb/assignment.h"
#include "fairnb/dataset.h"
#include "fairnb/model.h"
#include "fairnb/pattern.h"

namespace fairnb::testing {

// D with prior 0.2; X sensitive, Y1 and Y2 not.
NaiveBayesModel ExampleModel();
inline constexpr VarIndex kD = 0, kX = 1, kY1 = 2, kY2 = 3;
inline constexpr ValueIndex kPos = 0, kNeg = 1;

struct RandomModelSpec {
  int num_features = 4;
  int min_arity = 2;
  int max_arity = 3;
  int num_sensitive = 2;
  // Parameters are drawn from [floor, 1] before normalization.
  double floor = 0.05;
};

NaiveBayesModel RandomModel(std::mt19937_64& rng, const RandomModelSpec& spec);

// N rows drawn from the model's joint distribution.
Dataset SampleDataset(const NaiveBayesModel& model, std::size_t n,
                      std::uint64_t seed);

// Product of raw parameters, no logs.
double DirectJoint(const NaiveBayesModel& model, int decision_index,
                   const Assignment& evidence);
// Sum of the full joint over every completion of `evidence`.
double EnumeratedMarginal(const NaiveBayesModel& model, int decision_index,
                          const Assignment& evidence);
double DirectPosterior(const NaiveBayesModel& model, const Assignment& e);
double DirectDelta(const NaiveBayesModel& model, const Assignment& x,
                   const Assignment& y);

// KL objective of the fair-projection problem, direct space.
double DirectG(double p_dxy, double p_ndxy, double r);
// Minimizes g over the feasible r interval by golden section.
double GoldenSectionDivergence(const NaiveBayesModel& model,
                               const Assignment& x, const Assignment& y,
                               double delta, double tol = 1e-12);

double GoldenSection(const std::function<double(double)>& f, double a, double b,
                     double tol);
// Returns (argmin, min) of f on a uniform grid.
std::pair<double, double> GridMin(const std::function<double(double)>& f,
                                  double a, double b, double step);

// Every (x', y') with x' extending x by sensitive variables and y' extending
// y, over variables outside x, y, excluded. Includes (x, y) itself.
std::vector<std::pair<Assignment, Assignment>> Extensions(
    const NaiveBayesModel& model, const Assignment& x, const Assignment& y,
    const std::vector<VarIndex>& excluded);

// Every candidate pattern with nonempty x, scored directly.
std::vector<Pattern> OraclePatterns(const NaiveBayesModel& model, double delta);

// Random prefix (x, y, excluded) over a model's features.
struct Prefix {
  Assignment x;
  Assignment y;
  std::vector<VarIndex> excluded;
};
Prefix RandomPrefix(std::mt19937_64& rng, const NaiveBayesModel& model);

}  // namespace fairnb::testing

#endif  // FAIRNB_TESTS_TESTING_FIXTURES_H_
