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

// Local solver for signomial programs.
//
// Works in u = log x. Every inequality p(x) - q(x) <= 1 (p, q posynomials)
// is rewritten as log p(u) - log(1 + q(u)) <= 0: a convex term minus the
// log of a condensable posynomial. Each outer iteration solves a convex
// model of the program inside a trust region:
//
//   minimize  a'd + d'Wd/2 + sum_i rho_i s_i
//   s.t.      h_i(u) + grad h_i(u)'d <= s_i,  s_i >= 0,  E d = 0,
//             |d|_inf <= T,  u + d <= log(upper)
//
// where W collects the curvature of the convex parts weighted by the
// previous multipliers. The model is solved by damped Newton on a log
// barrier with a decreasing barrier weight. The step is then projected back
// onto the feasible set (restoration) and accepted only if the objective
// does not increase; otherwise the trust region shrinks.

#ifndef FAIRNB_SP_SOLVER_H_
#define FAIRNB_SP_SOLVER_H_

#include <cmath>
#include <span>
#include <string_view>
#include <vector>

#include "fairnb/signomial.h"

namespace fairnb {

struct SolverOptions {
  double feasibility_tolerance = 1e-6;
  double step_tolerance = 1e-8;
  int max_iterations = 200;
  int max_phase1_iterations = 100;
  double trust_region = 1.0;
  // How far the init may be from satisfying the equalities.
  double init_equality_tolerance = 1e-3;
};

enum class SolveStatus { kConverged, kIterationLimit, kInfeasibleAtTolerance };

std::string_view SolveStatusName(SolveStatus status);

struct Solution {
  std::vector<double> values;
  // log of the objective; the objective itself can overflow a double.
  double log_objective = 0.0;
  double max_violation = 0.0;
  int iterations = 0;
  int phase1_iterations = 0;
  SolveStatus status = SolveStatus::kIterationLimit;
  // log objective at the start of the main loop and after every accepted
  // step.
  std::vector<double> log_objective_trace;

  double objective() const { return std::exp(log_objective); }
};

// max(0, f_i(x) - 1) over inequalities and |g_j(x) - 1| over equalities.
double MaxViolation(const SignomialProgram& program,
                    std::span<const double> values);

// Throws kInvalidInit if init is not strictly positive, has the wrong size,
// or misses an equality by more than options.init_equality_tolerance;
// kInvalidSchema if the program references undeclared variables.
Solution Solve(const SignomialProgram& program, std::span<const double> init,
               const SolverOptions& options = {});

}  // namespace fairnb

#endif  // FAIRNB_SP_SOLVER_H_
