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

#include "fairnb/bounds.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fairnb/error.h"
#include "testing/fixtures.h"

namespace fairnb {
namespace {

using testing::ExampleModel;
using testing::kX;
using testing::kY1;
using testing::kY2;

constexpr double kTol = 1e-9;

TEST(DeltaTildeTest, ClosedFormCases) {
  for (double g : {0.0, 0.3, 0.99}) {
    EXPECT_EQ(DeltaTilde(0.4, 0.4, g), 0.0);
    EXPECT_NEAR(DeltaTilde(0.4, 0.0, g), 1.0 - g, 1e-15);
    EXPECT_NEAR(DeltaTilde(0.0, 0.4, g), -g, 1e-15);
  }
}

TEST(DeltaTildeTest, ExampleIdentity) {
  const NaiveBayesModel m = ExampleModel();
  EXPECT_NEAR(DeltaTilde(0.2, 0.5, Posterior(m, {{kY1, 0}})), -0.225, 1e-3);
}

TEST(DeltaTildeTest, IdentityOnRandomModels) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const NaiveBayesModel m = testing::RandomModel(rng, {});
    testing::Prefix p = testing::RandomPrefix(rng, m);
    if (p.x.empty()) continue;
    const double alpha = std::exp(internal::LogClassLikelihoods(m, p.x)[0]);
    const double beta = std::exp(internal::LogClassLikelihoods(m, p.x)[1]);
    EXPECT_NEAR(DeltaTilde(alpha, beta, Posterior(m, p.y)),
                DiscriminationScore(m, p.x, p.y), 1e-12);
  }
}

TEST(DeltaTildeExtremumTest, Examples) {
  const auto e = DeltaTildeExtremumOver(0.2, 0.5, 0.0, 1.0, Direction::kMin);
  EXPECT_NEAR(e.value, (2 * std::sqrt(0.10) - 0.7) / 0.3, 1e-12);
  EXPECT_NEAR(e.gamma_opt, (0.5 - std::sqrt(0.10)) / 0.3, 1e-12);
  EXPECT_FALSE(e.clamped);

  const auto same = DeltaTildeExtremumOver(0.3, 0.3, 0.1, 0.9, Direction::kMax);
  EXPECT_EQ(same.value, 0.0);
  EXPECT_FALSE(same.clamped);

  const auto c = DeltaTildeExtremumOver(0.8, 0.5, 0.9, 1.0, Direction::kMax);
  EXPECT_TRUE(c.clamped);
  EXPECT_DOUBLE_EQ(c.gamma_opt, 0.9);
  EXPECT_DOUBLE_EQ(c.value, DeltaTilde(0.8, 0.5, 0.9));
  auto f = [](double g) { return -DeltaTilde(0.8, 0.5, g); };
  EXPECT_NEAR(testing::GridMin(f, 0.9, 1.0, 1e-5).first, 0.9, 1e-5);
}

TEST(DeltaTildeExtremumTest, RejectsInvertedInterval) {
  EXPECT_THROW(DeltaTildeExtremumOver(0.2, 0.5, 0.6, 0.4, Direction::kMin),
               Error);
}

TEST(DeltaTildeExtremumTest, MatchesGridSearch) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = u(rng), b = u(rng);
    double l = u(rng), h = u(rng);
    if (l > h) std::swap(l, h);
    for (Direction dir : {Direction::kMin, Direction::kMax}) {
      const double sign = dir == Direction::kMin ? 1.0 : -1.0;
      auto f = [&](double g) { return sign * DeltaTilde(a, b, g); };
      const auto grid = testing::GridMin(f, l, h, 1e-5);
      const auto e = DeltaTildeExtremumOver(a, b, l, h, dir);
      EXPECT_NEAR(e.value, sign * grid.second, 1e-4);
    }
  }
}

TEST(ExtremalExtensionTest, ExampleModel) {
  const NaiveBayesModel m = ExampleModel();
  const std::vector<VarIndex> all{kX, kY1, kY2};
  EXPECT_EQ(ExtremalExtension(m, {}, all, Direction::kMax),
            (Assignment{{kX, 0}, {kY1, 0}, {kY2, 0}}));
  EXPECT_TRUE(ExtremalExtension(m, {}, {}, Direction::kMax).empty());
  const std::vector<VarIndex> x_only{kX};
  EXPECT_EQ(ExtremalExtension(m, {{kY1, 0}}, x_only, Direction::kMin),
            (Assignment{{kX, 1}, {kY1, 0}}));
}

TEST(ExtremalExtensionTest, AttainsEnumeratedExtremes) {
  std::mt19937_64 rng(13);
  testing::RandomModelSpec spec;
  spec.num_features = 8;
  spec.max_arity = 2;
  for (int trial = 0; trial < 1000; ++trial) {
    const NaiveBayesModel m = testing::RandomModel(rng, spec);
    Assignment fixed;
    std::vector<VarIndex> free;
    for (VarIndex v : m.schema().features()) {
      if (rng() % 3 == 0) {
        fixed.Bind(v, static_cast<ValueIndex>(rng() % 2));
      } else {
        free.push_back(v);
      }
    }
    double lo = 1.0, hi = 0.0;
    const std::size_t n = free.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Assignment full = fixed;
      for (std::size_t i = 0; i < n; ++i) full.Bind(free[i], (mask >> i) & 1);
      const double p = testing::DirectPosterior(m, full);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    EXPECT_NEAR(
        Posterior(m, ExtremalExtension(m, fixed, free, Direction::kMax)), hi,
        1e-12);
    EXPECT_NEAR(
        Posterior(m, ExtremalExtension(m, fixed, free, Direction::kMin)), lo,
        1e-12);
  }
}

TEST(DiscriminationBoundTest, FullyBoundIsExact) {
  const NaiveBayesModel m = ExampleModel();
  const Assignment x{{kX, 1}};
  const Assignment y{{kY1, 0}, {kY2, 1}};
  const ScoreBound b = DiscriminationBound(m, x, y, {});
  const double s = DiscriminationScore(m, x, y);
  EXPECT_NEAR(b.lower, s, 1e-12);
  EXPECT_NEAR(b.upper, s, 1e-12);
}

TEST(DiscriminationBoundTest, ExampleContainsWorkedScores) {
  const NaiveBayesModel m = ExampleModel();
  const ScoreBound b = DiscriminationBound(m, {{kX, 1}}, {}, {});
  EXPECT_GE(b.upper, -0.109);
  EXPECT_LE(b.lower, -0.225);
  EXPECT_LE(b.lower, -0.167);
}

double MaxExtensionDivergence(const NaiveBayesModel& m,
                              const testing::Prefix& p, double delta,
                              double* lo, double* hi) {
  double best = 0.0;
  *lo = std::numeric_limits<double>::infinity();
  *hi = -*lo;
  for (const auto& [x, y] : testing::Extensions(m, p.x, p.y, p.excluded)) {
    if (x.empty()) continue;
    const double s = testing::DirectDelta(m, x, y);
    *lo = std::min(*lo, s);
    *hi = std::max(*hi, s);
    if (IsDiscriminating(s, delta)) {
      best = std::max(best, testing::GoldenSectionDivergence(m, x, y, delta));
    }
  }
  return best;
}

TEST(BoundAdmissibilityTest, RandomPrefixes) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> delta_dist(0.0, 0.3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    testing::RandomModelSpec spec;
    spec.num_features = 5;
    spec.num_sensitive = 1 + trial % 3;
    const NaiveBayesModel m = testing::RandomModel(rng, spec);
    const testing::Prefix p = testing::RandomPrefix(rng, m);
    const double delta = delta_dist(rng);
    double lo, hi;
    const double div = MaxExtensionDivergence(m, p, delta, &lo, &hi);
    if (!std::isfinite(lo)) continue;
    ++checked;
    const ScoreBound b = DiscriminationBound(m, p.x, p.y, p.excluded);
    EXPECT_LE(b.lower, lo + kTol);
    EXPECT_GE(b.upper, hi - kTol);
    EXPECT_GE(DivergenceBoundDelta(m, p.x, p.y, p.excluded, delta), div - kTol);
    EXPECT_GE(DivergenceBoundFairPoint(m, p.x, p.y), div - kTol);
  }
  EXPECT_GT(checked, 200);
}

TEST(DivergenceScoreTest, ZeroWhenFair) {
  const NaiveBayesModel m = ExampleModel();
  EXPECT_EQ(DivergenceScore(m, {{kX, 1}}, {{kY1, 0}, {kY2, 1}}, 0.2), 0.0);
  EXPECT_EQ(DivergenceScore(m, {{kX, 1}}, {{kY1, 0}}, 1.0), 0.0);
}

TEST(DivergenceScoreTest, ExampleMatchesGoldenSection) {
  const NaiveBayesModel m = ExampleModel();
  const Assignment x{{kX, 1}};
  const Assignment y{{kY1, 0}};
  const double score = DivergenceScore(m, x, y, 0.1);
  EXPECT_GT(score, 0.0);
  EXPECT_NEAR(score, testing::GoldenSectionDivergence(m, x, y, 0.1, 1e-10),
              1e-10);
}

TEST(DivergenceScoreTest, NonnegativeMonotoneAndMinimal) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const NaiveBayesModel m = testing::RandomModel(rng, {});
    const testing::Prefix p = testing::RandomPrefix(rng, m);
    if (p.x.empty()) continue;
    double prev = std::numeric_limits<double>::infinity();
    for (double delta : {0.0, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0}) {
      const double s = DivergenceScore(m, p.x, p.y, delta);
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, prev + 1e-15);
      prev = s;
    }
    // g at the optimum is below g at random feasible r.
    const double delta = 0.05;
    const Assignment xy = Assignment::Union(p.x, p.y);
    const double pd = testing::DirectJoint(m, 0, xy);
    const double pn = testing::DirectJoint(m, 1, xy);
    const double py =
        testing::DirectJoint(m, 0, p.y) + testing::DirectJoint(m, 1, p.y);
    const double k = 1.0 / (pd + pn) - 1.0 / py;
    const double disc = testing::DirectDelta(m, p.x, p.y);
    const double lo = std::max(-pd, (-delta - disc) / k);
    const double hi = std::min(pn, (delta - disc) / k);
    const double best = DivergenceScore(m, p.x, p.y, delta);
    for (int i = 0; i < 100 && lo < hi; ++i) {
      const double r = lo + (hi - lo) * u(rng);
      EXPECT_LE(best, testing::DirectG(pd, pn, r) + 1e-15);
    }
  }
}

TEST(DivergenceBoundTest, ExampleFairPointDominatesChild) {
  const NaiveBayesModel m = ExampleModel();
  EXPECT_GE(DivergenceBoundFairPoint(m, {{kX, 1}}, {}),
            DivergenceScore(m, {{kX, 1}}, {{kY1, 0}}, 0.1));
}

TEST(DivergenceBoundTest, ZeroWhenDiscriminationBoundIsInsideDelta) {
  const NaiveBayesModel m = ExampleModel();
  const std::vector<VarIndex> excluded{kY1, kY2};
  const ScoreBound b = DiscriminationBound(m, {{kX, 0}}, {}, excluded);
  ASSERT_LE(b.MaxAbs(), 0.1);
  EXPECT_EQ(DivergenceBoundDelta(m, {{kX, 0}}, {}, excluded, 0.1), 0.0);
}

TEST(DivergenceBoundTest, FullyBoundDominatesScore) {
  const NaiveBayesModel m = ExampleModel();
  const Assignment x{{kX, 1}};
  const Assignment y{{kY1, 0}, {kY2, 0}};
  const double s = DivergenceScore(m, x, y, 0.1);
  EXPECT_GE(DivergenceBoundDelta(m, x, y, {}, 0.1), s - 1e-15);
  EXPECT_GE(DivergenceBoundFairPoint(m, x, y), s - 1e-15);
}

}  // namespace
}  // namespace fairnb
