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

#include "fairnb/estimation.h"

#include "fairnb/error.h"

namespace fairnb {

NaiveBayesModel Fit(const Schema& schema, const SufficientStatistics& counts,
                    double alpha) {
  counts.CheckDimensions(schema);
  if (!(alpha >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 0");
  }
  const SufficientStatistics s = counts.WithPseudoCount(alpha);
  if (!(s.MinCount() > 0.0)) {
    throw Error(ErrorCode::kMustSmooth,
                "zero count with alpha = 0; use a positive pseudo-count");
  }
  const double prior = s.decision[0] / (s.decision[0] + s.decision[1]);
  std::vector<ClassTable> cpts(schema.num_variables());
  for (VarIndex v : schema.features()) {
    for (int c = 0; c < 2; ++c) {
      const auto& row = s.features[v][c];
      double sum = 0.0;
      for (double n : row) sum += n;
      cpts[v][c].reserve(row.size());
      for (double n : row) cpts[v][c].push_back(n / sum);
    }
  }
  return NaiveBayesModel(schema, prior, std::move(cpts));
}

}  // namespace fairnb
