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

#include "fairnb/pattern.h"

#include <cmath>
#include <limits>
#include <string>

#include "fairnb/bounds.h"
#include "fairnb/error.h"

namespace fairnb {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return kSaturated;
  return out;
}

}  // namespace

Pattern ScorePattern(const NaiveBayesModel& model, const Assignment& x,
                     const Assignment& y, double delta) {
  Pattern p;
  p.x = x;
  p.y = y;
  p.delta = DiscriminationScore(model, x, y);
  p.mass = Marginal(model, Assignment::Union(x, y));
  if (IsDiscriminating(p.delta, delta)) {
    try {
      p.divergence = DivergenceScore(model, x, y, delta);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegeneratePattern) throw;
      p.divergence = 0.0;
    }
  }
  return p;
}

bool CanonicalLess(const Pattern& a, const Pattern& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

bool SameIdentity(const Pattern& a, const Pattern& b) {
  return a.x == b.x && a.y == b.y;
}

std::string_view RankingName(Ranking ranking) {
  return ranking == Ranking::kDiscrimination ? "discrimination" : "divergence";
}

Ranking ParseRanking(std::string_view name) {
  if (name == "discrimination") return Ranking::kDiscrimination;
  if (name == "divergence") return Ranking::kDivergence;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown ranking '" + std::string(name) + "'");
}

double RankScore(const Pattern& p, Ranking ranking) {
  return ranking == Ranking::kDiscrimination ? std::abs(p.delta) : p.divergence;
}

bool RankedBefore(const Pattern& a, const Pattern& b, Ranking ranking) {
  const double sa = RankScore(a, ranking);
  const double sb = RankScore(b, ranking);
  if (sa != sb) return sa > sb;
  return CanonicalLess(a, b);
}

std::uint64_t SearchSpaceSize(const Schema& schema) {
  std::uint64_t with_sensitive_choice = 1;
  std::uint64_t without_x = 1;
  for (VarIndex v : schema.features()) {
    const auto c = static_cast<std::uint64_t>(schema.cardinality(v));
    without_x = SaturatingMul(without_x, 1 + c);
    with_sensitive_choice = SaturatingMul(
        with_sensitive_choice, schema.IsSensitive(v) ? 1 + 2 * c : 1 + c);
  }
  if (with_sensitive_choice == kSaturated) return kSaturated;
  return with_sensitive_choice - without_x;
}

}  // namespace fairnb
