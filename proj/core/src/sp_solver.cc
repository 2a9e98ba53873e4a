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

#include "fairnb/sp_solver.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "fairnb/error.h"

namespace fairnb {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Barrier-weight schedule of the convex model.
constexpr double kMuStart = 1.0;
constexpr double kMuFactor = 0.2;
constexpr double kMuEnd = 1e-12;

constexpr double kInitialPenalty = 100.0;
constexpr double kMaxPenalty = 1e10;
constexpr double kRestorationPenalty = 1e6;
constexpr int kRestorationSteps = 20;
// Restoration aims well below the tolerance so that objective values of
// different iterates are comparable.
constexpr double kRestorationTarget = 1e-12;
constexpr double kCurvatureFloor = 1e-8;
// Strict interior margin kept from the box in log space.
constexpr double kBoxMargin = 1e-13;

struct LogTerm {
  double log_coefficient;
  Exponents exponents;

  double Eval(const VectorXd& u) const {
    double z = log_coefficient;
    for (const auto& [j, a] : exponents) z += a * u[j];
    return z;
  }
};

// log-sum-exp of a list of terms with gradient and, optionally, Hessian.
struct Lse {
  double value = -kInf;
  VectorXd grad;
  MatrixXd hess;
};

Lse LogSumExp(const std::vector<LogTerm>& terms, bool with_constant_one,
              const VectorXd& u, bool want_hessian) {
  const int n = static_cast<int>(u.size());
  Lse out;
  out.grad = VectorXd::Zero(n);
  if (want_hessian) out.hess = MatrixXd::Zero(n, n);
  std::vector<double> z;
  z.reserve(terms.size());
  double m = with_constant_one ? 0.0 : -kInf;
  for (const LogTerm& t : terms) {
    z.push_back(t.Eval(u));
    m = std::max(m, z.back());
  }
  if (m == -kInf) return out;
  double total = with_constant_one ? std::exp(-m) : 0.0;
  for (double zk : z) total += std::exp(zk - m);
  out.value = m + std::log(total);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double w = std::exp(z[k] - out.value);
    for (const auto& [j, a] : terms[k].exponents) out.grad[j] += w * a;
    if (!want_hessian) continue;
    for (const auto& [i, ai] : terms[k].exponents) {
      for (const auto& [j, aj] : terms[k].exponents) {
        out.hess(i, j) += w * ai * aj;
      }
    }
  }
  if (want_hessian) out.hess -= out.grad * out.grad.transpose();
  return out;
}

// log p(u) - log(1 + q(u)) <= 0.
struct LogConstraint {
  std::vector<LogTerm> positive;
  std::vector<LogTerm> negative;
};

struct Linearization {
  VectorXd c;  // h_i(u)
  MatrixXd J;  // rows grad h_i(u)
  MatrixXd W;  // PSD part of sum_i weight_i * hess h_i(u)
};

struct QpResult {
  VectorXd d;
  VectorXd s;
  VectorXd lambda;
};

class Solver {
 public:
  Solver(const SignomialProgram& program, const SolverOptions& options)
      : program_(program), options_(options) {
    n_ = static_cast<int>(program.variables.size());
    a_ = VectorXd::Zero(n_);
    for (const auto& [j, e] : program.objective.exponents()) a_[j] = e;
    log_c0_ = std::log(program.objective.coefficient());
    scale_ = a_.lpNorm<1>() > 0 ? a_.lpNorm<1>() : 1.0;

    upper_ = VectorXd::Constant(n_, kInf);
    for (int j = 0; j < n_; ++j) {
      if (program.variables[j].upper)
        upper_[j] = std::log(*program.variables[j].upper);
    }
    for (const Signomial& s : program.inequalities) {
      LogConstraint lc;
      for (const auto& t : s.terms()) {
        LogTerm term{std::log(std::abs(t.coefficient)), t.exponents};
        (t.coefficient > 0 ? lc.positive : lc.negative).push_back(term);
      }
      // Without positive terms the constraint holds everywhere.
      if (!lc.positive.empty()) constraints_.push_back(std::move(lc));
    }
    const int k = static_cast<int>(program.equalities.size());
    E_ = MatrixXd::Zero(k, n_);
    f_ = VectorXd::Zero(k);
    for (int r = 0; r < k; ++r) {
      for (const auto& [j, e] : program.equalities[r].exponents()) E_(r, j) = e;
      f_[r] = -std::log(program.equalities[r].coefficient());
    }
    if (k > 0) {
      Eigen::JacobiSVD<MatrixXd> svd(E_,
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
      svd.setThreshold(1e-12);
      const int rank = static_cast<int>(svd.rank());
      Z_ = svd.matrixV().rightCols(n_ - rank);
      svd_ = std::move(svd);
    } else {
      Z_ = MatrixXd::Identity(n_, n_);
    }
    rho_ = VectorXd::Constant(m(), kInitialPenalty);
  }

  Solution Run(std::span<const double> init) {
    VectorXd u = Start(init);
    Solution sol;
    if (Violation(u) > options_.feasibility_tolerance) {
      sol.phase1_iterations = Restore(u, options_.max_phase1_iterations);
      sol.iterations = sol.phase1_iterations;
      if (Violation(u) > options_.feasibility_tolerance) {
        return Finish(u, SolveStatus::kInfeasibleAtTolerance, sol);
      }
    }
    VectorXd lambda = VectorXd::Zero(m());
    double radius = options_.trust_region;
    double obj = LogObjective(u);
    sol.log_objective_trace.push_back(obj);
    for (int it = 0; it < options_.max_iterations; ++it) {
      ++sol.iterations;
      const Linearization lin = Linearize(u, lambda);
      const QpResult qp = SolveModel(u, a_ / scale_, lin, lin.W, rho_, radius);
      const double step = qp.d.lpNorm<Eigen::Infinity>();
      if (step <= options_.step_tolerance) {
        return Finish(u, SolveStatus::kConverged, sol);
      }
      for (int i = 0; i < m(); ++i) {
        if (qp.s[i] > 1e-9 && qp.lambda[i] > 0.5 * rho_[i]) {
          rho_[i] = std::min(kMaxPenalty, rho_[i] * 10.0);
        }
      }
      VectorXd trial = u + qp.d;
      Restore(trial, kRestorationSteps);
      const double trial_obj = LogObjective(trial);
      const bool feasible = Violation(trial) <= options_.feasibility_tolerance;
      if (feasible && trial_obj <= obj + 1e-12 * std::max(1.0, std::abs(obj))) {
        const double moved = (trial - u).lpNorm<Eigen::Infinity>();
        u = trial;
        obj = trial_obj;
        lambda = qp.lambda;
        sol.log_objective_trace.push_back(obj);
        if (step >= 0.9 * radius) {
          radius = std::min(options_.trust_region, 2.0 * radius);
        }
        if (moved <= options_.step_tolerance) {
          return Finish(u, SolveStatus::kConverged, sol);
        }
      } else {
        radius = 0.5 * step;
        if (radius <= options_.step_tolerance) {
          return Finish(u, SolveStatus::kConverged, sol);
        }
      }
    }
    return Finish(u, SolveStatus::kIterationLimit, sol);
  }

 private:
  int m() const { return static_cast<int>(constraints_.size()); }

  VectorXd Start(std::span<const double> init) {
    if (static_cast<int>(init.size()) != n_) {
      throw Error(ErrorCode::kInvalidInit, "init has the wrong dimension");
    }
    for (double v : init) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(ErrorCode::kInvalidInit, "init must be strictly positive");
      }
    }
    for (const Monomial& g : program_.equalities) {
      if (std::abs(Evaluate(g, init) - 1.0) >
          options_.init_equality_tolerance) {
        throw Error(ErrorCode::kInvalidInit,
                    "init violates an equality constraint");
      }
    }
    VectorXd u(n_);
    for (int j = 0; j < n_; ++j) u[j] = std::log(init[j]);
    if (E_.rows() > 0) u -= svd_->solve(E_ * u - f_);
    for (int j = 0; j < n_; ++j) u[j] = std::min(u[j], upper_[j] - kBoxMargin);
    return u;
  }

  double LogObjective(const VectorXd& u) const { return log_c0_ + a_.dot(u); }

  std::vector<double> Values(const VectorXd& u) const {
    std::vector<double> x(n_);
    for (int j = 0; j < n_; ++j) x[j] = std::exp(u[j]);
    return x;
  }

  double Violation(const VectorXd& u) const {
    return MaxViolation(program_, Values(u));
  }

  Linearization Linearize(const VectorXd& u, const VectorXd& weights) const {
    Linearization lin;
    lin.c.resize(m());
    lin.J.resize(m(), n_);
    MatrixXd hessian = MatrixXd::Zero(n_, n_);
    for (int i = 0; i < m(); ++i) {
      const bool curved = weights[i] > 0.0;
      const Lse p = LogSumExp(constraints_[i].positive, false, u, curved);
      const Lse q = LogSumExp(constraints_[i].negative, true, u, curved);
      lin.c[i] = p.value - q.value;
      lin.J.row(i) = (p.grad - q.grad).transpose();
      if (curved) hessian += weights[i] * (p.hess - q.hess);
    }
    // Nearest positive definite matrix: clip the spectrum from below.
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(hessian);
    const VectorXd clipped = eig.eigenvalues().cwiseMax(kCurvatureFloor);
    lin.W = eig.eigenvectors() * clipped.asDiagonal() *
            eig.eigenvectors().transpose();
    return lin;
  }

  // Pulls u back to the feasible set by repeated minimum-norm steps on the
  // linearized constraints. Returns the number of steps taken.
  int Restore(VectorXd& u, int max_steps) {
    const double target =
        std::min(kRestorationTarget, 0.1 * options_.feasibility_tolerance);
    const VectorXd penalty = VectorXd::Constant(m(), kRestorationPenalty);
    const MatrixXd identity = MatrixXd::Identity(n_, n_);
    const VectorXd zero = VectorXd::Zero(n_);
    int steps = 0;
    while (steps < max_steps && Violation(u) > target) {
      ++steps;
      if (ProjectStep(u)) continue;
      if (Violation(u) <= options_.feasibility_tolerance) break;
      const Linearization lin = Linearize(u, VectorXd::Zero(m()));
      const QpResult qp = SolveModel(u, zero, lin, identity, penalty, 1.0);
      if (qp.d.lpNorm<Eigen::Infinity>() == 0.0) break;
      u += qp.d;
    }
    return steps;
  }

  // One minimum-norm Gauss-Newton step onto the violated constraints,
  // within the equality null space. Keeps u and returns false unless the
  // violation drops and the box holds.
  bool ProjectStep(VectorXd& u) const {
    const double before = Violation(u);
    const Linearization lin = Linearize(u, VectorXd::Zero(m()));
    std::vector<int> active;
    for (int i = 0; i < m(); ++i) {
      if (lin.c[i] > 0.0) active.push_back(i);
    }
    if (active.empty()) return false;
    MatrixXd JA(active.size(), n_);
    VectorXd cA(active.size());
    for (std::size_t r = 0; r < active.size(); ++r) {
      JA.row(r) = lin.J.row(active[r]);
      cA[r] = lin.c[active[r]];
    }
    const MatrixXd JZ = JA * Z_;
    const VectorXd y = JZ.completeOrthogonalDecomposition().solve(-cA);
    const VectorXd trial = u + Z_ * y;
    if (!trial.allFinite() ||
        (trial.array() > upper_.array() - kBoxMargin).any()) {
      return false;
    }
    if (!(Violation(trial) < before)) return false;
    u = trial;
    return true;
  }

  // Barrier method on the convex model around u.
  QpResult SolveModel(const VectorXd& u, const VectorXd& g,
                      const Linearization& lin, const MatrixXd& W,
                      const VectorXd& rho, double radius) const {
    const int mm = m();
    VectorXd d = VectorXd::Zero(n_);
    VectorXd s(mm);
    for (int i = 0; i < mm; ++i) s[i] = std::max(lin.c[i], 0.0) + 1.0;
    const VectorXd room = upper_ - u;  // > 0, may be +inf

    auto barrier_args_ok = [&](const VectorXd& dd, const VectorXd& ss) {
      for (int i = 0; i < mm; ++i) {
        if (!(ss[i] > 0.0)) return false;
        if (!(ss[i] - lin.c[i] - lin.J.row(i).dot(dd) > 0.0)) return false;
      }
      for (int j = 0; j < n_; ++j) {
        if (!(radius - dd[j] > 0.0 && radius + dd[j] > 0.0)) return false;
        if (!(room[j] - dd[j] > 0.0)) return false;
      }
      return true;
    };
    auto merit = [&](const VectorXd& dd, const VectorXd& ss, double mu) {
      double val = g.dot(dd) + 0.5 * dd.dot(W * dd) + rho.dot(ss);
      double bar = 0.0;
      for (int i = 0; i < mm; ++i) {
        bar += std::log(ss[i] - lin.c[i] - lin.J.row(i).dot(dd));
        bar += std::log(ss[i]);
      }
      for (int j = 0; j < n_; ++j) {
        bar += std::log(radius - dd[j]) + std::log(radius + dd[j]);
        if (std::isfinite(room[j])) bar += std::log(room[j] - dd[j]);
      }
      return val - mu * bar;
    };

    double mu = kMuStart;
    VectorXd w(mm);
    while (true) {
      for (int newton = 0; newton < 100; ++newton) {
        for (int i = 0; i < mm; ++i) {
          w[i] = s[i] - lin.c[i] - lin.J.row(i).dot(d);
        }
        VectorXd gd = g + W * d;
        MatrixXd S = W;
        VectorXd gs(mm);
        for (int j = 0; j < n_; ++j) {
          const double lo = radius + d[j];
          const double hi = radius - d[j];
          gd[j] += mu * (1.0 / hi - 1.0 / lo);
          S(j, j) += mu * (1.0 / (hi * hi) + 1.0 / (lo * lo));
          if (std::isfinite(room[j])) {
            const double r = room[j] - d[j];
            gd[j] += mu / r;
            S(j, j) += mu / (r * r);
          }
        }
        VectorXd D(mm);
        for (int i = 0; i < mm; ++i) {
          gd += (mu / w[i]) * lin.J.row(i).transpose();
          gs[i] = rho[i] - mu / w[i] - mu / s[i];
          D[i] = mu * (1.0 / (w[i] * w[i]) + 1.0 / (s[i] * s[i]));
          S += (mu / (w[i] * w[i] + s[i] * s[i])) * lin.J.row(i).transpose() *
               lin.J.row(i);
        }
        VectorXd gt = gd;
        for (int i = 0; i < mm; ++i) {
          gt += (mu / (w[i] * w[i])) * gs[i] / D[i] * lin.J.row(i).transpose();
        }
        const MatrixXd Sz = Z_.transpose() * S * Z_;
        const VectorXd rhs = -(Z_.transpose() * gt);
        const VectorXd dv = Sz.ldlt().solve(rhs);
        const VectorXd dd = Z_ * dv;
        VectorXd ds(mm);
        for (int i = 0; i < mm; ++i) {
          ds[i] = (-gs[i] + (mu / (w[i] * w[i])) * lin.J.row(i).dot(dd)) / D[i];
        }
        const double slope = gd.dot(dd) + gs.dot(ds);
        // Newton decrement of the barrier problem scaled by 1/mu.
        if (!(slope < 0.0) || -slope < std::max(1e-9 * mu, 1e-14)) break;

        double alpha = 1.0;
        for (int i = 0; i < mm; ++i) {
          if (ds[i] < 0) alpha = std::min(alpha, -0.99 * s[i] / ds[i]);
          const double dw = ds[i] - lin.J.row(i).dot(dd);
          if (dw < 0) alpha = std::min(alpha, -0.99 * w[i] / dw);
        }
        for (int j = 0; j < n_; ++j) {
          if (dd[j] > 0) {
            alpha = std::min(alpha, 0.99 * (radius - d[j]) / dd[j]);
            if (std::isfinite(room[j])) {
              alpha = std::min(alpha, 0.99 * (room[j] - d[j]) / dd[j]);
            }
          } else if (dd[j] < 0) {
            alpha = std::min(alpha, -0.99 * (radius + d[j]) / dd[j]);
          }
        }
        const double f0 = merit(d, s, mu);
        bool moved = false;
        for (int ls = 0; ls < 60; ++ls) {
          const VectorXd nd = d + alpha * dd;
          const VectorXd ns = s + alpha * ds;
          if (barrier_args_ok(nd, ns) &&
              merit(nd, ns, mu) <= f0 + 1e-4 * alpha * slope) {
            d = nd;
            s = ns;
            moved = true;
            break;
          }
          alpha *= 0.5;
        }
        if (!moved) break;
      }
      if (mu <= kMuEnd) break;
      mu *= kMuFactor;
    }
    QpResult out;
    out.d = d;
    out.s = s;
    out.lambda.resize(mm);
    for (int i = 0; i < mm; ++i) {
      out.lambda[i] = mu / (s[i] - lin.c[i] - lin.J.row(i).dot(d));
    }
    return out;
  }

  Solution Finish(const VectorXd& u, SolveStatus status, Solution sol) const {
    sol.values = Values(u);
    sol.log_objective = LogObjective(u);
    sol.max_violation = MaxViolation(program_, sol.values);
    sol.status = status;
    return sol;
  }

  const SignomialProgram& program_;
  SolverOptions options_;
  int n_ = 0;
  VectorXd a_;
  double log_c0_ = 0.0;
  double scale_ = 1.0;
  VectorXd upper_;
  std::vector<LogConstraint> constraints_;
  MatrixXd E_;
  VectorXd f_;
  MatrixXd Z_;
  std::optional<Eigen::JacobiSVD<MatrixXd>> svd_;
  VectorXd rho_;
};

}  // namespace

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged:
      return "converged";
    case SolveStatus::kIterationLimit:
      return "iteration-limit";
    case SolveStatus::kInfeasibleAtTolerance:
      return "infeasible-at-tolerance";
  }
  return "unknown";
}

double MaxViolation(const SignomialProgram& program,
                    std::span<const double> values) {
  double worst = 0.0;
  for (const Signomial& s : program.inequalities) {
    worst = std::max(worst, Evaluate(s, values) - 1.0);
  }
  for (const Monomial& g : program.equalities) {
    worst = std::max(worst, std::abs(Evaluate(g, values) - 1.0));
  }
  return worst;
}

Solution Solve(const SignomialProgram& program, std::span<const double> init,
               const SolverOptions& options) {
  program.Validate();
  Solver solver(program, options);
  return solver.Run(init);
}

}  // namespace fairnb
