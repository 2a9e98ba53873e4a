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

#ifndef FAIRNB_STATISTICS_H_
#define FAIRNB_STATISTICS_H_

#include <array>
#include <vector>

#include "fairnb/schema.h"

namespace fairnb {

// Decision class: index 0 is the favourable decision d, 1 is its negation.
enum class Decision { kPositive = 0, kNegative = 1 };

inline constexpr int Idx(Decision d) { return static_cast<int>(d); }

// Per-class value table for one feature: table[class][value].
using ClassTable = std::array<std::vector<double>, 2>;

// Counts n_i for every naive Bayes parameter. Counts are stored as doubles so
// that pseudo-counts can be folded in (see WithPseudoCount); raw data counts
// are integral.
struct SufficientStatistics {
  std::array<double, 2> decision{0.0, 0.0};
  // Indexed by variable; the decision variable's entry is left empty.
  std::vector<ClassTable> features;
  double total = 0.0;

  static SufficientStatistics Zeros(const Schema& schema);

  // Throws kDimensionMismatch if the tables do not match `schema`.
  void CheckDimensions(const Schema& schema) const;

  // Per-parameter count + alpha; this is what a Laplace-smoothed maximum
  // likelihood fit treats as its counts. The per-feature totals then differ
  // from the decision counts, which is expected.
  SufficientStatistics WithPseudoCount(double alpha) const;

  double MinCount() const;
};

}  // namespace fairnb

#endif  // FAIRNB_STATISTICS_H_
