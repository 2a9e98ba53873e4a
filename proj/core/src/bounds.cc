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

#include <algorithm>
#include <cmath>
#include <limits>

#include "fairnb/error.h"

namespace fairnb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (alpha, beta) scaled so that max(alpha, beta) = 1, from a log ratio.
std::pair<double, double> RatioPair(double log_ratio) {
  if (log_ratio >= 0) return {1.0, std::exp(-log_ratio)};
  return {std::exp(log_ratio), 1.0};
}

struct Extremes {
  ValueIndex argmin = 0;
  ValueIndex argmax = 0;
  double min = 0.0;
  double max = 0.0;
};

Extremes RatioExtremes(const NaiveBayesModel& model, VarIndex v) {
  Extremes e;
  const int card = model.schema().cardinality(v);
  e.min = e.max = model.LogLikelihoodRatio(v, 0);
  for (ValueIndex z = 1; z < card; ++z) {
    const double r = model.LogLikelihoodRatio(v, z);
    if (r > e.max) e.max = r, e.argmax = z;
    if (r < e.min) e.min = r, e.argmin = z;
  }
  return e;
}

void ValidatePrefix(const NaiveBayesModel& model, const Assignment& x,
                    const Assignment& y) {
  ValidateEvidence(model, x);
  ValidateEvidence(model, y);
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

}  // namespace

double DeltaTilde(double alpha, double beta, double gamma) {
  if (alpha == 0.0 && beta == 0.0) {
    throw Error(ErrorCode::kUndefinedQuery,
                "P(d | xy) is undefined when alpha = beta = 0");
  }
  if (beta == 0.0) return 1.0 - gamma;
  if (alpha == 0.0) return -gamma;
  const double num = alpha * gamma;
  return num / (num + beta * (1.0 - gamma)) - gamma;
}

DeltaTildeExtremum DeltaTildeExtremumOver(double alpha, double beta, double l,
                                          double u, Direction direction) {
  if (!(l >= 0.0 && u <= 1.0 && l <= u)) {
    throw Error(ErrorCode::kInvalidInterval, "need 0 <= l <= u <= 1");
  }
  if (alpha == 0.0 && beta == 0.0) {
    throw Error(ErrorCode::kUndefinedQuery,
                "P(d | xy) is undefined when alpha = beta = 0");
  }
  if (alpha == beta) return {l, 0.0, false};

  const bool interior_is_min = alpha < beta;
  const bool want_min = direction == Direction::kMin;
  if (interior_is_min == want_min && alpha > 0.0 && beta > 0.0) {
    const double sa = std::sqrt(alpha);
    const double sb = std::sqrt(beta);
    const double gamma_opt = sb / (sa + sb);
    if (gamma_opt < l) return {l, DeltaTilde(alpha, beta, l), true};
    if (gamma_opt > u) return {u, DeltaTilde(alpha, beta, u), true};
    return {gamma_opt, (sa - sb) / (sa + sb), false};
  }
  const double fl = DeltaTilde(alpha, beta, l);
  const double fu = DeltaTilde(alpha, beta, u);
  const bool pick_l = want_min ? fl <= fu : fl >= fu;
  return pick_l ? DeltaTildeExtremum{l, fl, false}
                : DeltaTildeExtremum{u, fu, false};
}

Assignment ExtremalExtension(const NaiveBayesModel& model,
                             const Assignment& fixed,
                             std::span<const VarIndex> free,
                             Direction direction) {
  Assignment out = fixed;
  for (VarIndex v : free) {
    if (!model.schema().IsFeature(v) || fixed.Contains(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "free variables must be unbound features");
    }
    const Extremes e = RatioExtremes(model, v);
    out.Bind(v, direction == Direction::kMax ? e.argmax : e.argmin);
  }
  return out;
}

double ScoreBound::MaxAbs() const {
  return std::max(std::abs(lower), std::abs(upper));
}

ScoreBound DiscriminationBound(const NaiveBayesModel& model,
                               const Assignment& x, const Assignment& y,
                               std::span<const VarIndex> excluded) {
  ValidatePrefix(model, x, y);
  const auto free = internal::FreeVariables(model, x, y, excluded);
  return internal::DiscriminationBoundFrom(
      internal::MakeContext(model, x, y, free));
}

double DivergenceObjective(double p_dxy, double p_ndxy, double r) {
  if (!(r > -p_dxy && r < p_ndxy)) return kInf;
  return -p_dxy * std::log1p(r / p_dxy) - p_ndxy * std::log1p(-r / p_ndxy);
}

double DivergenceScore(const NaiveBayesModel& model, const Assignment& x,
                       const Assignment& y, double delta) {
  const double disc = DiscriminationScore(model, x, y);
  if (std::abs(disc) <= delta) return 0.0;

  const std::array<double, 2> log_px = internal::LogClassLikelihoods(model, x);
  std::array<double, 2> p_cxy{};
  double p_xy = 0.0;
  double p_y = 0.0;
  double p_not_x_y = 0.0;  // P(y) - P(xy), without cancellation
  for (Decision d : {Decision::kPositive, Decision::kNegative}) {
    const double log_cy = model.LogJointUnchecked(d, y);
    p_cxy[Idx(d)] = std::exp(log_cy + log_px[Idx(d)]);
    p_xy += p_cxy[Idx(d)];
    p_y += std::exp(log_cy);
    p_not_x_y += std::exp(log_cy) * -std::expm1(log_px[Idx(d)]);
  }
  if (!(p_not_x_y > 0.0)) {
    throw Error(ErrorCode::kDegeneratePattern, "P(xy) equals P(y)");
  }
  const double one_minus_q = p_not_x_y / p_y;
  const double c = disc > delta ? delta - disc : -delta - disc;
  const double r = c * p_xy / one_minus_q;
  return std::max(0.0, DivergenceObjective(p_cxy[0], p_cxy[1], r));
}

double DivergenceBoundFairPoint(const NaiveBayesModel& model,
                                const Assignment& x, const Assignment& y) {
  ValidatePrefix(model, x, y);
  const auto free = internal::FreeVariables(model, x, y, {});
  return internal::FairPointBoundFrom(internal::MakeContext(model, x, y, free));
}

double DivergenceBoundDelta(const NaiveBayesModel& model, const Assignment& x,
                            const Assignment& y,
                            std::span<const VarIndex> excluded, double delta) {
  ValidatePrefix(model, x, y);
  const auto free = internal::FreeVariables(model, x, y, excluded);
  const auto ctx = internal::MakeContext(model, x, y, free);
  return internal::DeltaDivergenceBoundFrom(
      ctx, internal::DiscriminationBoundFrom(ctx), delta);
}

namespace internal {

std::array<double, 2> LogClassLikelihoods(const NaiveBayesModel& model,
                                          const Assignment& a) {
  std::array<double, 2> out{0.0, 0.0};
  for (const Binding& b : a) {
    for (int c = 0; c < 2; ++c) {
      out[c] += model.LogParameter(b.var, static_cast<Decision>(c), b.value);
    }
  }
  return out;
}

double LogLogistic(double t) {
  if (t >= 0) return -std::log1p(std::exp(-t));
  return t - std::log1p(std::exp(t));
}

std::vector<VarIndex> FreeVariables(const NaiveBayesModel& model,
                                    const Assignment& x, const Assignment& y,
                                    std::span<const VarIndex> excluded) {
  std::vector<VarIndex> free;
  for (VarIndex v : model.schema().features()) {
    if (x.Contains(v) || y.Contains(v)) continue;
    if (std::find(excluded.begin(), excluded.end(), v) != excluded.end()) {
      continue;
    }
    free.push_back(v);
  }
  return free;
}

BoundContext MakeContext(const NaiveBayesModel& model, const Assignment& x,
                         const Assignment& y, std::span<const VarIndex> free) {
  BoundContext ctx;
  ctx.x_empty = x.empty();
  ctx.log_odds_y = model.LogPosteriorOddsUnchecked(y);
  for (int c = 0; c < 2; ++c) {
    ctx.log_joint_y[c] = model.LogJointUnchecked(static_cast<Decision>(c), y);
  }
  ctx.log_px = LogClassLikelihoods(model, x);
  for (const Binding& b : x) {
    ctx.log_ratio_x += model.LogLikelihoodRatio(b.var, b.value);
    const Extremes e = RatioExtremes(model, b.var);
    ctx.x_min_lr += e.min;
    ctx.x_max_lr += e.max;
  }
  for (VarIndex v : free) {
    const Extremes e = RatioExtremes(model, v);
    ctx.free_max_lr += e.max;
    ctx.free_min_lr += e.min;
    if (!model.schema().IsSensitive(v)) continue;
    ctx.has_free_sensitive = true;
    ctx.free_sens_max_lr += e.max;
    ctx.free_sens_min_lr += e.min;
    for (int c = 0; c < 2; ++c) {
      const auto& col = model.cpts()[v][c];
      ctx.free_sens_min_log_theta[c] +=
          std::log(*std::min_element(col.begin(), col.end()));
      ctx.free_sens_max_theta = std::max(
          ctx.free_sens_max_theta, *std::max_element(col.begin(), col.end()));
    }
  }
  return ctx;
}

ScoreBound DiscriminationBoundFrom(const BoundContext& ctx) {
  if (ctx.x_empty && !ctx.has_free_sensitive) return {0.0, 0.0};
  const double l = Logistic(ctx.log_odds_y + ctx.free_min_lr);
  const double u = Logistic(ctx.log_odds_y + ctx.free_max_lr);
  const auto [au, bu] = RatioPair(ctx.log_ratio_x + ctx.free_sens_max_lr);
  const auto [al, bl] = RatioPair(ctx.log_ratio_x + ctx.free_sens_min_lr);
  ScoreBound out;
  out.upper = DeltaTildeExtremumOver(au, bu, l, u, Direction::kMax).value;
  out.lower = DeltaTildeExtremumOver(al, bl, l, u, Direction::kMin).value;
  if (out.lower > out.upper) std::swap(out.lower, out.upper);
  return out;
}

double FairPointBoundFrom(const BoundContext& ctx) {
  if (ctx.x_empty && !ctx.has_free_sensitive) return 0.0;
  const double a_max = ctx.log_odds_y + ctx.log_ratio_x + ctx.free_max_lr;
  const double a_min = ctx.log_odds_y + ctx.log_ratio_x + ctx.free_min_lr;
  const double b_min = ctx.log_odds_y + ctx.x_min_lr + ctx.free_min_lr;
  const double b_max = ctx.log_odds_y + ctx.x_max_lr + ctx.free_max_lr;
  const double p_dxy = std::exp(ctx.log_joint_y[0] + ctx.log_px[0]);
  const double p_ndxy = std::exp(ctx.log_joint_y[1] + ctx.log_px[1]);
  const double t1 = LogLogistic(a_max) - LogLogistic(b_min);
  const double t2 = LogLogistic(-a_min) - LogLogistic(-b_max);
  return p_dxy * std::max(0.0, t1) + p_ndxy * std::max(0.0, t2);
}

double DeltaDivergenceBoundFrom(const BoundContext& ctx, const ScoreBound& disc,
                                double delta) {
  if (ctx.x_empty && !ctx.has_free_sensitive) return 0.0;
  const double c_u = delta - disc.upper;
  const double c_l = -delta - disc.lower;
  if (!(c_u < 0.0) && !(c_l > 0.0)) return 0.0;

  const double t_min = ctx.log_odds_y + ctx.log_ratio_x + ctx.free_min_lr;
  const double t_max = ctx.log_odds_y + ctx.log_ratio_x + ctx.free_max_lr;
  const double p_min = Logistic(t_min);
  const double p_max = Logistic(t_max);
  const double np_min = Logistic(-t_max);  // 1 - p_max
  const double np_max = Logistic(-t_min);  // 1 - p_min
  double q_max;
  if (ctx.x_empty) {
    q_max = ctx.free_sens_max_theta;
  } else {
    q_max = std::exp(std::max(ctx.log_px[0], ctx.log_px[1]));
  }
  const double q_min =
      std::exp(std::min(ctx.log_px[0] + ctx.free_sens_min_log_theta[0],
                        ctx.log_px[1] + ctx.free_sens_min_log_theta[1]));
  const double one_minus_q_max = -std::expm1(std::log(q_max));
  const double one_minus_q_min = -std::expm1(std::log(q_min));

  double bound = 0.0;
  if (c_u < 0.0) {
    const double p_dxy = std::exp(ctx.log_joint_y[0] + ctx.log_px[0]);
    const double den = p_min * one_minus_q_max + c_u;
    if (!(den > 0.0)) return kInf;
    bound = std::max(bound, p_dxy * std::log(p_max * one_minus_q_min / den));
  }
  if (c_l > 0.0) {
    const double p_ndxy = std::exp(ctx.log_joint_y[1] + ctx.log_px[1]);
    const double den = np_min * one_minus_q_max - c_l;
    if (!(den > 0.0)) return kInf;
    bound = std::max(bound, p_ndxy * std::log(np_max * one_minus_q_min / den));
  }
  return bound;
}

}  // namespace internal
}  // namespace fairnb
