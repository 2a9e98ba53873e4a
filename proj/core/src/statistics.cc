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

#include "fairnb/statistics.h"

#include <algorithm>
#include <limits>

#include "fairnb/error.h"

namespace fairnb {

SufficientStatistics SufficientStatistics::Zeros(const Schema& schema) {
  SufficientStatistics s;
  s.features.resize(schema.num_variables());
  for (VarIndex v : schema.features()) {
    for (auto& row : s.features[v]) row.assign(schema.cardinality(v), 0.0);
  }
  return s;
}

void SufficientStatistics::CheckDimensions(const Schema& schema) const {
  if (static_cast<int>(features.size()) != schema.num_variables()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "statistics cover a different number of variables");
  }
  for (VarIndex v : schema.features()) {
    for (const auto& row : features[v]) {
      if (static_cast<int>(row.size()) != schema.cardinality(v)) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "count table for '" + schema.variable(v).name +
                        "' has the wrong cardinality");
      }
    }
  }
  if (!features[schema.decision()][0].empty() ||
      !features[schema.decision()][1].empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "decision variable must not carry a feature table");
  }
}

SufficientStatistics SufficientStatistics::WithPseudoCount(double alpha) const {
  SufficientStatistics s = *this;
  s.decision[0] += alpha;
  s.decision[1] += alpha;
  s.total += 2.0 * alpha;
  for (auto& table : s.features) {
    for (auto& row : table) {
      for (double& n : row) n += alpha;
    }
  }
  return s;
}

double SufficientStatistics::MinCount() const {
  double m = std::min(decision[0], decision[1]);
  for (const auto& table : features) {
    for (const auto& row : table) {
      for (double n : row) m = std::min(m, n);
    }
  }
  return m;
}

}  // namespace fairnb
