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

// Score functions and admissible bounds used to prune the pattern search.
//
// All bounds range over extensions (x x', y y') of a prefix (x, y) where x'
// binds free sensitive variables, y' binds free variables not in x', and
// "free" means not in x, y, or the excluded set.

#ifndef FAIRNB_BOUNDS_H_
#define FAIRNB_BOUNDS_H_

#include <array>
#include <span>
#include <vector>

#include "fairnb/assignment.h"
#include "fairnb/model.h"

namespace fairnb {

// alpha*gamma / (alpha*gamma + beta*(1-gamma)) - gamma. With alpha = P(x|d),
// beta = P(x|not d) and gamma = P(d|y) this equals the degree of
// discrimination of (x, y). Throws kUndefinedQuery if alpha == beta == 0.
double DeltaTilde(double alpha, double beta, double gamma);

struct DeltaTildeExtremum {
  double gamma_opt = 0.0;
  double value = 0.0;
  // True when the stationary point fell outside [l, u] and was clipped.
  bool clamped = false;
};

// Extremum of DeltaTilde(alpha, beta, .) over [l, u]. The stationary point
// sqrt(beta)/(sqrt(alpha)+sqrt(beta)) is a minimum when alpha < beta and a
// maximum when alpha > beta; the opposite extremum sits at an endpoint.
// Throws kInvalidInterval unless 0 <= l <= u <= 1.
DeltaTildeExtremum DeltaTildeExtremumOver(double alpha, double beta, double l,
                                          double u, Direction direction);

// `fixed` extended over `free` so that P(d | result) is maximal (minimal);
// each variable takes the value with the largest (smallest) likelihood
// ratio, lowest value index on ties.
Assignment ExtremalExtension(const NaiveBayesModel& model,
                             const Assignment& fixed,
                             std::span<const VarIndex> free,
                             Direction direction);

struct ScoreBound {
  double lower = 0.0;
  double upper = 0.0;

  double MaxAbs() const;
};

// Interval containing the degree of discrimination of every extension.
ScoreBound DiscriminationBound(const NaiveBayesModel& model,
                               const Assignment& x, const Assignment& y,
                               std::span<const VarIndex> excluded);

// g(r) = p_d log(p_d / (p_d + r)) + p_nd log(p_nd / (p_nd - r)): the KL
// divergence after moving mass r from (not d, x, y) to (d, x, y).
double DivergenceObjective(double p_dxy, double p_ndxy, double r);

// Minimum KL divergence to a distribution that is delta-fair on (x, y) and
// agrees with the model outside the pattern. Zero when |Delta| <= delta.
// Throws kDegeneratePattern when P(xy) == P(y).
double DivergenceScore(const NaiveBayesModel& model, const Assignment& x,
                       const Assignment& y, double delta);

// Upper bound on the divergence score of every extension, from the point
// that makes the pattern exactly fair.
double DivergenceBoundFairPoint(const NaiveBayesModel& model,
                                const Assignment& x, const Assignment& y);

// Upper bound on the divergence score of every extension, built from the
// discrimination bounds. May be +infinity when the relaxation degenerates.
double DivergenceBoundDelta(const NaiveBayesModel& model, const Assignment& x,
                            const Assignment& y,
                            std::span<const VarIndex> excluded, double delta);

namespace internal {

// Log-space aggregates of a search prefix and its free variables. The miner
// maintains these incrementally; the public functions above build them from
// assignments.
struct BoundContext {
  bool x_empty = true;
  double log_ratio_x = 0.0;                     // sum_x lr
  double log_odds_y = 0.0;                      // log prior odds + sum_y lr
  std::array<double, 2> log_px{0.0, 0.0};       // sum_x log theta_{x|c}
  std::array<double, 2> log_joint_y{0.0, 0.0};  // log P(c, y)
  double x_min_lr = 0.0;                        // sum over X of min_z lr
  double x_max_lr = 0.0;                        // sum over X of max_z lr

  bool has_free_sensitive = false;
  double free_sens_max_lr = 0.0;  // sum over free sensitive of max_z lr
  double free_sens_min_lr = 0.0;
  double free_max_lr = 0.0;  // sum over all free of max_z lr
  double free_min_lr = 0.0;
  std::array<double, 2> free_sens_min_log_theta{0.0, 0.0};
  double free_sens_max_theta = 0.0;  // max theta over free sensitive values
};

BoundContext MakeContext(const NaiveBayesModel& model, const Assignment& x,
                         const Assignment& y, std::span<const VarIndex> free);

// Variables that are features, unbound by x and y, and not excluded.
std::vector<VarIndex> FreeVariables(const NaiveBayesModel& model,
                                    const Assignment& x, const Assignment& y,
                                    std::span<const VarIndex> excluded);

ScoreBound DiscriminationBoundFrom(const BoundContext& ctx);
double FairPointBoundFrom(const BoundContext& ctx);
double DeltaDivergenceBoundFrom(const BoundContext& ctx, const ScoreBound& disc,
                                double delta);

// (sum_a log theta_{a|d}, sum_a log theta_{a|not d}).
std::array<double, 2> LogClassLikelihoods(const NaiveBayesModel& model,
                                          const Assignment& a);

// log(logistic(t)) without overflow.
double LogLogistic(double t);

}  // namespace internal
}  // namespace fairnb

#endif  // FAIRNB_BOUNDS_H_
