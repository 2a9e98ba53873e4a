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

#ifndef FAIRNB_EVALUATION_H_
#define FAIRNB_EVALUATION_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "fairnb/dataset.h"
#include "fairnb/model.h"

namespace fairnb {

inline constexpr std::uint64_t kDefaultFoldSeed = 2020;

// Predicts the positive decision iff its posterior given all features is
// strictly above 0.5.
bool PredictPositive(const NaiveBayesModel& model,
                     const std::vector<ValueIndex>& row);

// Fraction of rows whose decision is predicted correctly. Throws
// kDimensionMismatch if the schemas differ, kInvalidArgument when empty.
double Accuracy(const NaiveBayesModel& model, const Dataset& data);

// Joint log-likelihood of every row.
double DatasetLogLikelihood(const NaiveBayesModel& model, const Dataset& data);

// Row indices of each fold. Rows of each class are shuffled with `seed`,
// positives then negatives are laid out in one sequence, and row i of that
// sequence goes to fold i mod folds. Fold sizes differ by at most one and
// class proportions by at most one row per class. Throws kInvalidFolds
// unless 2 <= folds <= rows.
std::vector<std::vector<std::size_t>> StratifiedFolds(const Dataset& data,
                                                      int folds,
                                                      std::uint64_t seed);

using Learner = std::function<NaiveBayesModel(const Dataset& train)>;

struct CrossValidation {
  int folds = 0;
  std::uint64_t seed = kDefaultFoldSeed;
  std::vector<std::size_t> fold_sizes;
  std::vector<double> accuracies;

  double MeanAccuracy() const;
};

// Trains on all folds but one and scores the held-out fold, for each fold.
CrossValidation CrossValidate(const Dataset& data, int folds,
                              const Learner& learner,
                              std::uint64_t seed = kDefaultFoldSeed);

}  // namespace fairnb

#endif  // FAIRNB_EVALUATION_H_
