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

#ifndef FAIRNB_MODEL_H_
#define FAIRNB_MODEL_H_

#include <vector>

#include "fairnb/assignment.h"
#include "fairnb/schema.h"
#include "fairnb/statistics.h"

namespace fairnb {

// Naive Bayes distribution over a binary decision D and categorical features
// Z, parameterized by theta_d and theta_{z|d}, theta_{z|not d}. Immutable.
//
// Every parameter lies strictly inside (0, 1) and every conditional column
// sums to one within 1e-9; the constructor enforces both.
class NaiveBayesModel {
 public:
  // `cpts` is indexed by variable; the decision variable's entry is ignored.
  NaiveBayesModel(Schema schema, double prior, std::vector<ClassTable> cpts);

  const Schema& schema() const { return schema_; }

  // theta_d, probability of the favourable decision.
  double prior() const { return prior_; }
  double Prior(Decision d) const {
    return d == Decision::kPositive ? prior_ : 1.0 - prior_;
  }
  double Parameter(VarIndex v, Decision d, ValueIndex z) const {
    return cpts_[v][Idx(d)][z];
  }
  double LogParameter(VarIndex v, Decision d, ValueIndex z) const {
    return log_cpts_[v][Idx(d)][z];
  }
  const std::vector<ClassTable>& cpts() const { return cpts_; }

  // log theta_{z|d} - log theta_{z|not d}.
  double LogLikelihoodRatio(VarIndex v, ValueIndex z) const {
    return log_cpts_[v][0][z] - log_cpts_[v][1][z];
  }
  double LogPriorOdds() const { return log_prior_odds_; }

  // log theta_D + sum_e log theta_{e|D}; no validation.
  double LogJointUnchecked(Decision d, const Assignment& evidence) const;
  // log-odds of d given evidence; no validation.
  double LogPosteriorOddsUnchecked(const Assignment& evidence) const;

 private:
  Schema schema_;
  double prior_;
  double log_prior_odds_;
  std::array<double, 2> log_prior_;
  std::vector<ClassTable> cpts_;
  std::vector<ClassTable> log_cpts_;
};

// Checks that `evidence` is within the schema and does not bind D.
// Throws kInvalidSchema / kInvalidQuery.
void ValidateEvidence(const NaiveBayesModel& model, const Assignment& evidence);

// P(d | evidence) with unobserved features marginalized out.
double Posterior(const NaiveBayesModel& model, const Assignment& evidence);

// P(D = decision, evidence).
double JointProbability(const NaiveBayesModel& model, Decision decision,
                        const Assignment& evidence);

// P(evidence), summed over both decisions.
double Marginal(const NaiveBayesModel& model, const Assignment& evidence);

// Degree of discrimination P(d | xy) - P(d | y).
// Throws kInvalidPattern unless x is nonempty, binds only sensitive
// variables, and shares no variable with y.
double DiscriminationScore(const NaiveBayesModel& model, const Assignment& x,
                           const Assignment& y);
void ValidatePattern(const NaiveBayesModel& model, const Assignment& x,
                     const Assignment& y);

// sum_i n_i log theta_i over every parameter.
double LogLikelihood(const NaiveBayesModel& model,
                     const SufficientStatistics& counts);

// logistic(t) = 1 / (1 + exp(-t)), stable for large |t|.
double Logistic(double t);

}  // namespace fairnb

#endif  // FAIRNB_MODEL_H_
