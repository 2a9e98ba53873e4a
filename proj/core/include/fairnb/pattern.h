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

#ifndef FAIRNB_PATTERN_H_
#define FAIRNB_PATTERN_H_

#include <cstdint>
#include <string_view>

#include "fairnb/assignment.h"
#include "fairnb/model.h"

namespace fairnb {

// A candidate (x, y) with its scores under some model and threshold.
struct Pattern {
  Assignment x;
  Assignment y;
  double delta = 0.0;       // P(d | xy) - P(d | y)
  double divergence = 0.0;  // zero unless |delta| > threshold
  double mass = 0.0;        // P(xy)
};

// Scores (x, y) through the public model and bounds functions.
Pattern ScorePattern(const NaiveBayesModel& model, const Assignment& x,
                     const Assignment& y, double delta);

// Def.-2 test: strictly more than `delta` in absolute value.
inline bool IsDiscriminating(double score, double delta) {
  return score > delta || -score > delta;
}

// Lexicographic on x then y, each compared binding by binding.
bool CanonicalLess(const Pattern& a, const Pattern& b);
bool SameIdentity(const Pattern& a, const Pattern& b);

enum class Ranking { kDiscrimination, kDivergence };

std::string_view RankingName(Ranking ranking);
// Throws kInvalidArgument on an unknown name.
Ranking ParseRanking(std::string_view name);

// |delta| or divergence.
double RankScore(const Pattern& p, Ranking ranking);
// Higher score first, canonical order on ties.
bool RankedBefore(const Pattern& a, const Pattern& b, Ranking ranking);

// Number of (x, y) pairs with nonempty x over `schema`, saturating at
// UINT64_MAX.
std::uint64_t SearchSpaceSize(const Schema& schema);

}  // namespace fairnb

#endif  // FAIRNB_PATTERN_H_
