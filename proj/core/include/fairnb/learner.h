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

// Maximum-likelihood naive Bayes learning under fairness constraints.
//
// With r_x = prod theta_{x|not d} / prod theta_{x|d} and
// r_y = theta_{not d} prod theta_{y|not d} / (theta_d prod theta_{y|d}),
//
//   Delta >= -delta  <=>  ((1-delta)/delta) r_x r_y - ((1+delta)/delta) r_y
//                           - r_x r_y^2 <= 1
//   Delta <=  delta  <=> -((1+delta)/delta) r_x r_y + ((1-delta)/delta) r_y
//                           - r_x r_y^2 <= 1
//
// so each pattern contributes two signomial inequalities over the model
// parameters. LearnFair alternates between solving the program and mining
// the current model for new violated patterns.

#ifndef FAIRNB_LEARNER_H_
#define FAIRNB_LEARNER_H_

#include <optional>
#include <string>
#include <vector>

#include "fairnb/miner.h"
#include "fairnb/model.h"
#include "fairnb/signomial.h"
#include "fairnb/sp_solver.h"
#include "fairnb/statistics.h"

namespace fairnb {

// Program variable of every model parameter: theta_d, theta_{not d}, then
// theta_{z|d}, theta_{z|not d} for each feature and value.
class ParameterIndex {
 public:
  explicit ParameterIndex(const Schema& schema);

  int Prior(Decision d) const { return static_cast<int>(Idx(d)); }
  int Feature(VarIndex v, ValueIndex z, Decision d) const {
    return offsets_[v] + 2 * z + Idx(d);
  }
  int size() const { return size_; }
  const std::string& Name(int i) const { return names_[i]; }

 private:
  std::vector<int> offsets_;
  std::vector<std::string> names_;
  int size_ = 0;
};

struct FairnessConstraint {
  Assignment x;
  Assignment y;
  double delta = 0.0;
  Signomial lower;  // Delta >= -delta
  Signomial upper;  // Delta <= delta

  bool Satisfied(std::span<const double> theta, double tolerance = 0.0) const;
};

// Throws kUnsupportedThreshold unless 0 < delta < 1, kInvalidPattern for an
// invalid (x, y).
FairnessConstraint CompileConstraint(const Schema& schema,
                                     const ParameterIndex& index,
                                     const Assignment& x, const Assignment& y,
                                     double delta);

// Objective prod theta_i^{-n_i}, normalization pairs sum <= 1 and
// 2 - sum <= 1 for the prior and every (feature, class), then the fairness
// inequalities. `counts` must already include any pseudo-counts; a zero
// count throws kMustSmooth.
SignomialProgram BuildProgram(
    const Schema& schema, const SufficientStatistics& counts,
    const std::vector<FairnessConstraint>& constraints);

std::vector<double> ModelParameters(const NaiveBayesModel& model,
                                    const ParameterIndex& index);
// Renormalizes every column before building the model.
NaiveBayesModel ModelFromParameters(const Schema& schema,
                                    const ParameterIndex& index,
                                    std::span<const double> theta);

// Sensitive features get theta_{s|d} = theta_{s|not d} = smoothed marginal
// frequency; every other parameter is the smoothed ML estimate.
NaiveBayesModel IndependentBaseline(const Schema& schema,
                                    const SufficientStatistics& counts,
                                    double alpha = 1.0);

struct LearnOptions {
  double delta = 0.1;
  int k = 1;
  Ranking ranking = Ranking::kDiscrimination;
  double alpha = 1.0;
  int max_outer_iterations = 100;
  SolverOptions solver;
  // Constraints are compiled at delta - margin so that solver tolerance
  // cannot leave a pattern just above delta.
  double constraint_margin = 1e-6;
  // Count all patterns with |Delta| > delta after each iteration by brute
  // force, when the pattern space is below miner.brute_force_cap.
  bool trace_remaining_patterns = false;
  MinerOptions miner;
};

struct LearnIteration {
  double log_likelihood = 0.0;
  std::optional<std::uint64_t> remaining_patterns;
  int constraints_added = 0;
  int duplicates = 0;
  std::string solver_status;
  int solver_iterations = 0;
  double feasibility_tolerance = 0.0;
  double seconds = 0.0;
};

struct LearnReport {
  NaiveBayesModel model;
  int iterations = 0;
  int constraints_added = 0;
  bool fair = false;
  std::vector<FairnessConstraint> constraints;
  std::vector<LearnIteration> trace;
  double delta = 0.0;
  int k = 0;
  Ranking ranking = Ranking::kDiscrimination;
};

// Cutting-plane loop. `counts` are raw; options.alpha is added before
// fitting. Log-likelihoods in the trace are on the raw counts. Throws
// kSolverFailure when a solve ends infeasible.
LearnReport LearnFair(const Schema& schema, const SufficientStatistics& counts,
                      const LearnOptions& options);

}  // namespace fairnb

#endif  // FAIRNB_LEARNER_H_
