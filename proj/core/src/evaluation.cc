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

#include "fairnb/evaluation.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "fairnb/error.h"

namespace fairnb {
namespace {

void CheckSchema(const NaiveBayesModel& model, const Dataset& data) {
  if (!(model.schema() == data.schema)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "model and dataset schemas differ");
  }
}

Assignment Evidence(const Schema& schema, const std::vector<ValueIndex>& row) {
  Assignment e;
  for (VarIndex v : schema.features()) e.Bind(v, row[v]);
  return e;
}

}  // namespace

bool PredictPositive(const NaiveBayesModel& model,
                     const std::vector<ValueIndex>& row) {
  return model.LogPosteriorOddsUnchecked(Evidence(model.schema(), row)) > 0.0;
}

double Accuracy(const NaiveBayesModel& model, const Dataset& data) {
  CheckSchema(model, data);
  if (data.rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "accuracy of an empty dataset");
  }
  const Schema& schema = data.schema;
  std::size_t correct = 0;
  for (const auto& row : data.rows) {
    const bool positive = row[schema.decision()] == schema.positive_value();
    if (PredictPositive(model, row) == positive) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.rows.size());
}

double DatasetLogLikelihood(const NaiveBayesModel& model, const Dataset& data) {
  CheckSchema(model, data);
  return LogLikelihood(model, Counts(data));
}

std::vector<std::vector<std::size_t>> StratifiedFolds(const Dataset& data,
                                                      int folds,
                                                      std::uint64_t seed) {
  if (folds < 2 || static_cast<std::size_t>(folds) > data.rows.size()) {
    throw Error(ErrorCode::kInvalidFolds,
                "need 2 <= folds <= " + std::to_string(data.rows.size()) +
                    ", got " + std::to_string(folds));
  }
  const Schema& schema = data.schema;
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  for (std::size_t r = 0; r < data.rows.size(); ++r) {
    const bool positive =
        data.rows[r][schema.decision()] == schema.positive_value();
    (positive ? positives : negatives).push_back(r);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(positives.begin(), positives.end(), rng);
  std::shuffle(negatives.begin(), negatives.end(), rng);
  std::vector<std::vector<std::size_t>> out(folds);
  std::size_t i = 0;
  for (const auto* group : {&positives, &negatives}) {
    for (std::size_t r : *group) out[i++ % folds].push_back(r);
  }
  for (auto& fold : out) std::sort(fold.begin(), fold.end());
  return out;
}

double CrossValidation::MeanAccuracy() const {
  if (accuracies.empty()) return 0.0;
  return std::accumulate(accuracies.begin(), accuracies.end(), 0.0) /
         static_cast<double>(accuracies.size());
}

CrossValidation CrossValidate(const Dataset& data, int folds,
                              const Learner& learner, std::uint64_t seed) {
  const auto parts = StratifiedFolds(data, folds, seed);
  CrossValidation cv;
  cv.folds = folds;
  cv.seed = seed;
  for (int f = 0; f < folds; ++f) {
    std::vector<std::size_t> train;
    for (int g = 0; g < folds; ++g) {
      if (g != f) train.insert(train.end(), parts[g].begin(), parts[g].end());
    }
    std::sort(train.begin(), train.end());
    const NaiveBayesModel model = learner(Subset(data, train));
    cv.fold_sizes.push_back(parts[f].size());
    cv.accuracies.push_back(Accuracy(model, Subset(data, parts[f])));
  }
  return cv;
}

}  // namespace fairnb
