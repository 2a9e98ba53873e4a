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

#include "fairnb/model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairnb/error.h"

namespace fairnb {
namespace {

constexpr double kColumnTolerance = 1e-9;

bool Interior(double p) { return p > 0.0 && p < 1.0 && std::isfinite(p); }

}  // namespace

double Logistic(double t) {
  if (t >= 0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

NaiveBayesModel::NaiveBayesModel(Schema schema, double prior,
                                 std::vector<ClassTable> cpts)
    : schema_(std::move(schema)), prior_(prior), cpts_(std::move(cpts)) {
  if (!Interior(prior_)) {
    throw Error(ErrorCode::kInvalidModel, "prior must lie in (0, 1)");
  }
  if (static_cast<int>(cpts_.size()) != schema_.num_variables()) {
    throw Error(ErrorCode::kInvalidModel,
                "expected one CPT entry per schema variable");
  }
  cpts_[schema_.decision()] = ClassTable{};
  log_cpts_.resize(cpts_.size());
  for (VarIndex v : schema_.features()) {
    const std::string& name = schema_.variable(v).name;
    for (int c = 0; c < 2; ++c) {
      const auto& column = cpts_[v][c];
      if (static_cast<int>(column.size()) != schema_.cardinality(v)) {
        throw Error(ErrorCode::kInvalidModel,
                    "CPT for '" + name + "' has the wrong cardinality");
      }
      double sum = 0.0;
      for (double p : column) {
        if (!Interior(p)) {
          throw Error(ErrorCode::kInvalidModel,
                      "parameter of '" + name + "' outside (0, 1)");
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kColumnTolerance) {
        throw Error(ErrorCode::kInvalidModel,
                    "CPT column of '" + name + "' does not sum to one");
      }
      log_cpts_[v][c].reserve(column.size());
      for (double p : column) log_cpts_[v][c].push_back(std::log(p));
    }
  }
  log_prior_ = {std::log(prior_), std::log1p(-prior_)};
  log_prior_odds_ = log_prior_[0] - log_prior_[1];
}

double NaiveBayesModel::LogJointUnchecked(Decision d,
                                          const Assignment& evidence) const {
  const int c = Idx(d);
  double acc = log_prior_[c];
  for (const Binding& b : evidence) acc += log_cpts_[b.var][c][b.value];
  return acc;
}

double NaiveBayesModel::LogPosteriorOddsUnchecked(
    const Assignment& evidence) const {
  double acc = log_prior_odds_;
  for (const Binding& b : evidence) acc += LogLikelihoodRatio(b.var, b.value);
  return acc;
}

void ValidateEvidence(const NaiveBayesModel& model,
                      const Assignment& evidence) {
  model.schema().ValidateAssignment(evidence);
  if (evidence.Contains(model.schema().decision())) {
    throw Error(ErrorCode::kInvalidQuery,
                "evidence must not bind the decision variable");
  }
}

double Posterior(const NaiveBayesModel& model, const Assignment& evidence) {
  ValidateEvidence(model, evidence);
  return Logistic(model.LogPosteriorOddsUnchecked(evidence));
}

double JointProbability(const NaiveBayesModel& model, Decision decision,
                        const Assignment& evidence) {
  ValidateEvidence(model, evidence);
  return std::exp(model.LogJointUnchecked(decision, evidence));
}

double Marginal(const NaiveBayesModel& model, const Assignment& evidence) {
  ValidateEvidence(model, evidence);
  const double a = model.LogJointUnchecked(Decision::kPositive, evidence);
  const double b = model.LogJointUnchecked(Decision::kNegative, evidence);
  const double m = std::max(a, b);
  return std::exp(m) * (std::exp(a - m) + std::exp(b - m));
}

void ValidatePattern(const NaiveBayesModel& model, const Assignment& x,
                     const Assignment& y) {
  ValidateEvidence(model, x);
  ValidateEvidence(model, y);
  if (x.empty()) {
    throw Error(ErrorCode::kInvalidPattern,
                "pattern needs at least one sensitive binding");
  }
  for (const Binding& b : x) {
    if (!model.schema().IsSensitive(b.var)) {
      throw Error(ErrorCode::kInvalidPattern,
                  "x binds non-sensitive variable '" +
                      model.schema().variable(b.var).name + "'");
    }
  }
  if (x.SharesVariableWith(y)) {
    throw Error(ErrorCode::kInvalidPattern, "x and y overlap");
  }
}

double DiscriminationScore(const NaiveBayesModel& model, const Assignment& x,
                           const Assignment& y) {
  ValidatePattern(model, x, y);
  const double y_odds = model.LogPosteriorOddsUnchecked(y);
  double x_ratio = 0.0;
  for (const Binding& b : x)
    x_ratio += model.LogLikelihoodRatio(b.var, b.value);
  return Logistic(y_odds + x_ratio) - Logistic(y_odds);
}

double LogLikelihood(const NaiveBayesModel& model,
                     const SufficientStatistics& counts) {
  counts.CheckDimensions(model.schema());
  double ll = 0.0;
  for (Decision d : {Decision::kPositive, Decision::kNegative}) {
    const double n = counts.decision[Idx(d)];
    if (n != 0.0) ll += n * std::log(model.Prior(d));
  }
  for (VarIndex v : model.schema().features()) {
    for (Decision d : {Decision::kPositive, Decision::kNegative}) {
      const auto& row = counts.features[v][Idx(d)];
      for (ValueIndex z = 0; z < static_cast<int>(row.size()); ++z) {
        if (row[z] != 0.0) ll += row[z] * model.LogParameter(v, d, z);
      }
    }
  }
  return ll;
}

}  // namespace fairnb
