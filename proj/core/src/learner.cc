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

#include "fairnb/learner.h"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fairnb/error.h"
#include "fairnb/estimation.h"

namespace fairnb {
namespace {

constexpr Decision kD = Decision::kPositive;
constexpr Decision kNotD = Decision::kNegative;

void AddNormalizationPair(SignomialProgram& program,
                          const std::vector<int>& vars) {
  Signomial at_most_one;
  Signomial at_least_one;
  at_least_one.Add(2.0, Monomial());
  for (int v : vars) {
    at_most_one.Add(1.0, Monomial(1.0, {{v, 1.0}}));
    at_least_one.Add(-1.0, Monomial(1.0, {{v, 1.0}}));
  }
  program.inequalities.push_back(std::move(at_most_one));
  program.inequalities.push_back(std::move(at_least_one));
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

std::string DescribeConstraints(const Schema& schema,
                                const std::vector<FairnessConstraint>& cs) {
  std::ostringstream out;
  out << cs.size() << " active fairness constraints";
  for (const FairnessConstraint& c : cs) {
    out << "; x=" << FormatAssignment(schema, c.x)
        << " y=" << FormatAssignment(schema, c.y);
  }
  return out.str();
}

}  // namespace

ParameterIndex::ParameterIndex(const Schema& schema) {
  names_ = {"theta_d", "theta_dbar"};
  size_ = 2;
  offsets_.assign(schema.num_variables(), -1);
  for (VarIndex v : schema.features()) {
    offsets_[v] = size_;
    const Variable& var = schema.variable(v);
    for (const std::string& value : var.values) {
      names_.push_back("theta[" + var.name + "=" + value + "|d]");
      names_.push_back("theta[" + var.name + "=" + value + "|dbar]");
    }
    size_ += 2 * var.cardinality();
  }
}

bool FairnessConstraint::Satisfied(std::span<const double> theta,
                                   double tolerance) const {
  return Evaluate(lower, theta) <= 1.0 + tolerance &&
         Evaluate(upper, theta) <= 1.0 + tolerance;
}

FairnessConstraint CompileConstraint(const Schema& schema,
                                     const ParameterIndex& index,
                                     const Assignment& x, const Assignment& y,
                                     double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kUnsupportedThreshold,
                "fairness constraints need 0 < delta < 1");
  }
  schema.ValidateAssignment(x);
  schema.ValidateAssignment(y);
  if (x.empty() || x.SharesVariableWith(y)) {
    throw Error(ErrorCode::kInvalidPattern,
                "x must be nonempty and disjoint from y");
  }
  for (const Binding& b : x) {
    if (!schema.IsSensitive(b.var)) {
      throw Error(ErrorCode::kInvalidPattern,
                  "x binds a non-sensitive variable");
    }
  }
  if (y.Contains(schema.decision())) {
    throw Error(ErrorCode::kInvalidPattern, "y binds the decision variable");
  }

  Exponents rx;
  for (const Binding& b : x) {
    rx.emplace_back(index.Feature(b.var, b.value, kNotD), 1.0);
    rx.emplace_back(index.Feature(b.var, b.value, kD), -1.0);
  }
  Exponents ry{{index.Prior(kNotD), 1.0}, {index.Prior(kD), -1.0}};
  for (const Binding& b : y) {
    ry.emplace_back(index.Feature(b.var, b.value, kNotD), 1.0);
    ry.emplace_back(index.Feature(b.var, b.value, kD), -1.0);
  }
  const Monomial r_x(1.0, rx);
  const Monomial r_y(1.0, ry);
  const Monomial rxry = r_x * r_y;
  const Monomial rxry2 = rxry * r_y;
  const double a = (1.0 - delta) / delta;
  const double b = (1.0 + delta) / delta;

  FairnessConstraint c;
  c.x = x;
  c.y = y;
  c.delta = delta;
  c.lower.Add(a, rxry);
  c.lower.Add(-b, r_y);
  c.lower.Add(-1.0, rxry2);
  c.upper.Add(-b, rxry);
  c.upper.Add(a, r_y);
  c.upper.Add(-1.0, rxry2);
  return c;
}

SignomialProgram BuildProgram(
    const Schema& schema, const SufficientStatistics& counts,
    const std::vector<FairnessConstraint>& constraints) {
  counts.CheckDimensions(schema);
  if (!(counts.MinCount() > 0.0)) {
    throw Error(ErrorCode::kMustSmooth,
                "every count must be positive; apply a pseudo-count");
  }
  const ParameterIndex index(schema);
  SignomialProgram program;
  for (int i = 0; i < index.size(); ++i)
    program.AddVariable(index.Name(i), 1.0);

  Exponents objective{{index.Prior(kD), -counts.decision[0]},
                      {index.Prior(kNotD), -counts.decision[1]}};
  for (VarIndex v : schema.features()) {
    for (ValueIndex z = 0; z < schema.cardinality(v); ++z) {
      for (Decision d : {kD, kNotD}) {
        objective.emplace_back(index.Feature(v, z, d),
                               -counts.features[v][Idx(d)][z]);
      }
    }
  }
  program.objective = Monomial(1.0, std::move(objective));

  AddNormalizationPair(program, {index.Prior(kD), index.Prior(kNotD)});
  for (VarIndex v : schema.features()) {
    for (Decision d : {kD, kNotD}) {
      std::vector<int> column;
      for (ValueIndex z = 0; z < schema.cardinality(v); ++z) {
        column.push_back(index.Feature(v, z, d));
      }
      AddNormalizationPair(program, column);
    }
  }
  for (const FairnessConstraint& c : constraints) {
    program.inequalities.push_back(c.lower);
    program.inequalities.push_back(c.upper);
  }
  return program;
}

std::vector<double> ModelParameters(const NaiveBayesModel& model,
                                    const ParameterIndex& index) {
  const Schema& schema = model.schema();
  std::vector<double> theta(index.size());
  theta[index.Prior(kD)] = model.Prior(kD);
  theta[index.Prior(kNotD)] = model.Prior(kNotD);
  for (VarIndex v : schema.features()) {
    for (ValueIndex z = 0; z < schema.cardinality(v); ++z) {
      for (Decision d : {kD, kNotD}) {
        theta[index.Feature(v, z, d)] = model.Parameter(v, d, z);
      }
    }
  }
  return theta;
}

NaiveBayesModel ModelFromParameters(const Schema& schema,
                                    const ParameterIndex& index,
                                    std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != index.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "parameter vector does not match the schema");
  }
  const double prior = theta[index.Prior(kD)] /
                       (theta[index.Prior(kD)] + theta[index.Prior(kNotD)]);
  std::vector<ClassTable> cpts(schema.num_variables());
  for (VarIndex v : schema.features()) {
    for (Decision d : {kD, kNotD}) {
      auto& col = cpts[v][Idx(d)];
      double sum = 0.0;
      for (ValueIndex z = 0; z < schema.cardinality(v); ++z) {
        col.push_back(theta[index.Feature(v, z, d)]);
        sum += col.back();
      }
      for (double& p : col) p /= sum;
    }
  }
  return NaiveBayesModel(schema, prior, std::move(cpts));
}

NaiveBayesModel IndependentBaseline(const Schema& schema,
                                    const SufficientStatistics& counts,
                                    double alpha) {
  const NaiveBayesModel ml = Fit(schema, counts, alpha);
  std::vector<ClassTable> cpts = ml.cpts();
  for (VarIndex s : schema.sensitive()) {
    const int card = schema.cardinality(s);
    double total = 0.0;
    std::vector<double> pooled(card);
    for (ValueIndex z = 0; z < card; ++z) {
      pooled[z] = counts.features[s][0][z] + counts.features[s][1][z] + alpha;
      total += pooled[z];
    }
    for (double& p : pooled) p /= total;
    cpts[s] = {pooled, pooled};
  }
  return NaiveBayesModel(schema, ml.prior(), std::move(cpts));
}

LearnReport LearnFair(const Schema& schema, const SufficientStatistics& counts,
                      const LearnOptions& options) {
  if (!(options.delta > 0.0 && options.delta < 1.0)) {
    throw Error(ErrorCode::kUnsupportedThreshold,
                "learning needs 0 < delta < 1");
  }
  if (options.k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const ParameterIndex index(schema);
  const SufficientStatistics smoothed = counts.WithPseudoCount(options.alpha);
  NaiveBayesModel model = Fit(schema, counts, options.alpha);
  std::vector<double> theta = ModelParameters(model, index);

  std::vector<FairnessConstraint> constraints;
  std::vector<LearnIteration> trace;
  SolverOptions solver = options.solver;
  const double compile_delta = options.delta - options.constraint_margin;
  bool fair = false;

  for (int it = 0; it < options.max_outer_iterations; ++it) {
    const auto start = std::chrono::steady_clock::now();
    LearnIteration step;
    step.feasibility_tolerance = solver.feasibility_tolerance;
    if (!constraints.empty()) {
      const SignomialProgram program =
          BuildProgram(schema, smoothed, constraints);
      const Solution sol = Solve(program, theta, solver);
      step.solver_status = std::string(SolveStatusName(sol.status));
      step.solver_iterations = sol.iterations;
      if (sol.status == SolveStatus::kInfeasibleAtTolerance) {
        throw Error(ErrorCode::kSolverFailure,
                    "solver infeasible at tolerance with " +
                        DescribeConstraints(schema, constraints));
      }
      model = ModelFromParameters(schema, index, sol.values);
      theta = ModelParameters(model, index);
    } else {
      step.solver_status = "closed-form";
    }
    step.log_likelihood = LogLikelihood(model, counts);
    if (options.trace_remaining_patterns &&
        SearchSpaceSize(schema) <= options.miner.brute_force_cap) {
      step.remaining_patterns =
          DiscriminatingPatterns(
              BruteForcePatterns(model, options.delta, options.miner),
              options.delta)
              .size();
    }

    const MiningReport mined = MineTopK(model, options.delta, options.k,
                                        options.ranking, options.miner);
    if (mined.patterns.empty()) {
      fair = true;
    } else {
      for (const Pattern& p : mined.patterns) {
        const bool known = std::any_of(constraints.begin(), constraints.end(),
                                       [&](const FairnessConstraint& c) {
                                         return c.x == p.x && c.y == p.y;
                                       });
        if (known) {
          ++step.duplicates;
          continue;
        }
        constraints.push_back(
            CompileConstraint(schema, index, p.x, p.y, compile_delta));
        ++step.constraints_added;
      }
      if (step.constraints_added == 0) solver.feasibility_tolerance *= 0.1;
    }
    step.seconds = Seconds(start);
    trace.push_back(step);
    if (fair) break;
  }

  LearnReport report{std::move(model),        0, 0, false, {}, {}, 0.0, 0,
                     Ranking::kDiscrimination};
  report.iterations = static_cast<int>(trace.size());
  report.constraints_added = static_cast<int>(constraints.size());
  report.fair = fair;
  report.constraints = std::move(constraints);
  report.trace = std::move(trace);
  report.delta = options.delta;
  report.k = options.k;
  report.ranking = options.ranking;
  return report;
}

}  // namespace fairnb
