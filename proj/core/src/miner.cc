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

#include "fairnb/miner.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>

#include "fairnb/bounds.h"
#include "fairnb/error.h"

namespace fairnb {
namespace {

constexpr double kTolerance = 1e-12;

struct VarSummary {
  VarIndex var = 0;
  bool sensitive = false;
  double min_lr = 0.0;
  double max_lr = 0.0;
  std::array<double, 2> min_log_theta{};
  double max_theta = 0.0;
};

VarSummary Summarize(const NaiveBayesModel& model, VarIndex v) {
  VarSummary s;
  s.var = v;
  s.sensitive = model.schema().IsSensitive(v);
  const int card = model.schema().cardinality(v);
  s.min_lr = s.max_lr = model.LogLikelihoodRatio(v, 0);
  for (ValueIndex z = 1; z < card; ++z) {
    s.min_lr = std::min(s.min_lr, model.LogLikelihoodRatio(v, z));
    s.max_lr = std::max(s.max_lr, model.LogLikelihoodRatio(v, z));
  }
  for (int c = 0; c < 2; ++c) {
    const auto& col = model.cpts()[v][c];
    s.min_log_theta[c] = std::log(*std::min_element(col.begin(), col.end()));
    s.max_theta =
        std::max(s.max_theta, *std::max_element(col.begin(), col.end()));
  }
  return s;
}

// Aggregates over order[p..], for every p.
struct SuffixTables {
  std::vector<double> max_lr, min_lr, sens_max_lr, sens_min_lr, sens_max_theta;
  std::vector<std::array<double, 2>> sens_min_log_theta;
  std::vector<bool> has_sensitive;

  explicit SuffixTables(const std::vector<VarSummary>& vars) {
    const std::size_t n = vars.size();
    max_lr.assign(n + 1, 0.0);
    min_lr.assign(n + 1, 0.0);
    sens_max_lr.assign(n + 1, 0.0);
    sens_min_lr.assign(n + 1, 0.0);
    sens_max_theta.assign(n + 1, 0.0);
    sens_min_log_theta.assign(n + 1, {0.0, 0.0});
    has_sensitive.assign(n + 1, false);
    for (std::size_t i = n; i-- > 0;) {
      const VarSummary& s = vars[i];
      max_lr[i] = max_lr[i + 1] + s.max_lr;
      min_lr[i] = min_lr[i + 1] + s.min_lr;
      sens_max_lr[i] = sens_max_lr[i + 1];
      sens_min_lr[i] = sens_min_lr[i + 1];
      sens_max_theta[i] = sens_max_theta[i + 1];
      sens_min_log_theta[i] = sens_min_log_theta[i + 1];
      has_sensitive[i] = has_sensitive[i + 1];
      if (s.sensitive) {
        sens_max_lr[i] += s.max_lr;
        sens_min_lr[i] += s.min_lr;
        sens_max_theta[i] = std::max(sens_max_theta[i], s.max_theta);
        for (int c = 0; c < 2; ++c) {
          sens_min_log_theta[i][c] += s.min_log_theta[c];
        }
        has_sensitive[i] = true;
      }
    }
  }
};

// Search state for a prefix (x, y): the prefix part of a BoundContext.
struct Node {
  Assignment x;
  Assignment y;
  internal::BoundContext ctx;
};

enum class Mode { kAll, kTopK, kVerify };

class Search {
 public:
  Search(const NaiveBayesModel& model, double delta,
         std::vector<VarIndex> order, Mode mode, int k, Ranking ranking)
      : model_(model),
        delta_(delta),
        order_(std::move(order)),
        mode_(mode),
        k_(k),
        ranking_(ranking) {
    for (VarIndex v : order_) vars_.push_back(Summarize(model_, v));
    suffix_ = std::make_unique<SuffixTables>(vars_);
  }

  void Run() {
    Node root;
    root.ctx.log_odds_y = model_.LogPriorOdds();
    for (int c = 0; c < 2; ++c) {
      root.ctx.log_joint_y[c] =
          std::log(model_.Prior(static_cast<Decision>(c)));
    }
    Expand(root, 0);
  }

  std::vector<Pattern>& found() { return found_; }
  std::uint64_t visited() const { return visited_; }
  std::uint64_t pruned() const { return pruned_; }

 private:
  // Completes ctx with the free aggregates for order_[p..].
  internal::BoundContext WithFree(internal::BoundContext ctx,
                                  std::size_t p) const {
    const SuffixTables& t = *suffix_;
    ctx.free_max_lr = t.max_lr[p];
    ctx.free_min_lr = t.min_lr[p];
    ctx.has_free_sensitive = t.has_sensitive[p];
    ctx.free_sens_max_lr = t.sens_max_lr[p];
    ctx.free_sens_min_lr = t.sens_min_lr[p];
    ctx.free_sens_min_log_theta = t.sens_min_log_theta[p];
    ctx.free_sens_max_theta = t.sens_max_theta[p];
    return ctx;
  }

  bool Full() const { return static_cast<int>(found_.size()) >= k_; }

  double KthScore() const { return RankScore(found_.back(), ranking_); }

  // Whether some extension of the node (itself included) may still matter.
  bool Promising(const internal::BoundContext& ctx) const {
    const ScoreBound disc = internal::DiscriminationBoundFrom(ctx);
    if (!(disc.MaxAbs() > delta_ - kTolerance)) return false;
    if (mode_ != Mode::kTopK || !Full()) return true;
    double bound = disc.MaxAbs();
    if (ranking_ == Ranking::kDivergence) {
      bound = std::min(internal::FairPointBoundFrom(ctx),
                       internal::DeltaDivergenceBoundFrom(ctx, disc, delta_));
    }
    return bound + kTolerance >= KthScore();
  }

  void Offer(const Node& node) {
    if (node.x.empty()) return;
    ++visited_;
    Pattern p = ScorePattern(model_, node.x, node.y, delta_);
    if (!IsDiscriminating(p.delta, delta_)) return;
    if (mode_ == Mode::kAll) {
      found_.push_back(std::move(p));
      return;
    }
    if (mode_ == Mode::kVerify) {
      found_.push_back(std::move(p));
      done_ = true;
      return;
    }
    if (Full() && !RankedBefore(p, found_.back(), ranking_)) return;
    auto pos = std::upper_bound(found_.begin(), found_.end(), p,
                                [this](const Pattern& a, const Pattern& b) {
                                  return RankedBefore(a, b, ranking_);
                                });
    found_.insert(pos, std::move(p));
    if (static_cast<int>(found_.size()) > k_) found_.pop_back();
  }

  void Visit(Node child, std::size_t p) {
    if (!Promising(WithFree(child.ctx, p))) {
      ++pruned_;
      return;
    }
    Offer(child);
    if (!done_) Expand(child, p);
  }

  void Expand(const Node& node, std::size_t p) {
    if (p == order_.size() || done_) return;
    const VarSummary& s = vars_[p];
    const VarIndex v = s.var;
    const int card = model_.schema().cardinality(v);
    for (ValueIndex z = 0; z < card && !done_; ++z) {
      const double lr = model_.LogLikelihoodRatio(v, z);
      if (s.sensitive) {
        Node child{node.x.With(v, z), node.y, node.ctx};
        child.ctx.x_empty = false;
        child.ctx.log_ratio_x += lr;
        child.ctx.x_min_lr += s.min_lr;
        child.ctx.x_max_lr += s.max_lr;
        for (int c = 0; c < 2; ++c) {
          child.ctx.log_px[c] +=
              model_.LogParameter(v, static_cast<Decision>(c), z);
        }
        Visit(std::move(child), p + 1);
      }
      if (done_) break;
      Node child{node.x, node.y.With(v, z), node.ctx};
      child.ctx.log_odds_y += lr;
      for (int c = 0; c < 2; ++c) {
        child.ctx.log_joint_y[c] +=
            model_.LogParameter(v, static_cast<Decision>(c), z);
      }
      Visit(std::move(child), p + 1);
    }
    if (done_) return;
    if (!Promising(WithFree(node.ctx, p + 1))) {
      ++pruned_;
      return;
    }
    Expand(node, p + 1);
  }

  const NaiveBayesModel& model_;
  double delta_;
  std::vector<VarIndex> order_;
  Mode mode_;
  int k_;
  Ranking ranking_;
  std::vector<VarSummary> vars_;
  std::unique_ptr<SuffixTables> suffix_;

  std::vector<Pattern> found_;
  std::uint64_t visited_ = 0;
  std::uint64_t pruned_ = 0;
  bool done_ = false;
};

std::vector<VarIndex> ResolveOrder(const NaiveBayesModel& model,
                                   const MinerOptions& options) {
  if (options.branching_order.empty()) return DefaultBranchingOrder(model);
  std::vector<VarIndex> sorted = options.branching_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != model.schema().features()) {
    throw Error(ErrorCode::kInvalidArgument,
                "branching order must be a permutation of the features");
  }
  return options.branching_order;
}

void ValidateDelta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in [0, 1]");
  }
}

MiningReport Report(const NaiveBayesModel& model, double delta,
                    std::vector<VarIndex> order, Search& search) {
  MiningReport r;
  r.patterns = std::move(search.found());
  r.nodes_visited = search.visited();
  r.nodes_pruned = search.pruned();
  r.search_space_size = SearchSpaceSize(model.schema());
  r.certified_fair = r.patterns.empty();
  r.delta = delta;
  r.branching_order = std::move(order);
  return r;
}

void Enumerate(const NaiveBayesModel& model, double delta,
               const std::vector<VarIndex>& features, std::size_t p,
               Assignment& x, Assignment& y, std::vector<Pattern>& out) {
  if (p == features.size()) {
    if (!x.empty()) out.push_back(ScorePattern(model, x, y, delta));
    return;
  }
  Enumerate(model, delta, features, p + 1, x, y, out);
  const VarIndex v = features[p];
  for (ValueIndex z = 0; z < model.schema().cardinality(v); ++z) {
    if (model.schema().IsSensitive(v)) {
      x.Bind(v, z);
      Enumerate(model, delta, features, p + 1, x, y, out);
      x.Unbind(v);
    }
    y.Bind(v, z);
    Enumerate(model, delta, features, p + 1, x, y, out);
    y.Unbind(v);
  }
}

}  // namespace

double MiningReport::ExploredFraction() const {
  if (search_space_size == 0) return 0.0;
  return static_cast<double>(nodes_visited) /
         static_cast<double>(search_space_size);
}

std::vector<VarIndex> DefaultBranchingOrder(const NaiveBayesModel& model) {
  std::vector<std::pair<double, VarIndex>> keyed;
  for (VarIndex v : model.schema().features()) {
    const VarSummary s = Summarize(model, v);
    keyed.emplace_back(s.max_lr - s.min_lr, v);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<VarIndex> order;
  for (const auto& [spread, v] : keyed) order.push_back(v);
  return order;
}

MiningReport MineAll(const NaiveBayesModel& model, double delta,
                     const MinerOptions& options) {
  ValidateDelta(delta);
  auto order = ResolveOrder(model, options);
  Search search(model, delta, order, Mode::kAll, 0, Ranking::kDiscrimination);
  search.Run();
  std::sort(search.found().begin(), search.found().end(), CanonicalLess);
  return Report(model, delta, std::move(order), search);
}

MiningReport MineTopK(const NaiveBayesModel& model, double delta, int k,
                      Ranking ranking, const MinerOptions& options) {
  ValidateDelta(delta);
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  auto order = ResolveOrder(model, options);
  Search search(model, delta, order, Mode::kTopK, k, ranking);
  search.Run();
  MiningReport r = Report(model, delta, std::move(order), search);
  r.k = k;
  r.ranking = ranking;
  return r;
}

VerifyResult VerifyFair(const NaiveBayesModel& model, double delta,
                        const MinerOptions& options) {
  ValidateDelta(delta);
  Search search(model, delta, ResolveOrder(model, options), Mode::kVerify, 1,
                Ranking::kDiscrimination);
  search.Run();
  VerifyResult r;
  r.nodes_visited = search.visited();
  if (!search.found().empty()) {
    r.fair = false;
    r.witness = search.found().front();
  }
  return r;
}

std::vector<Pattern> BruteForcePatterns(const NaiveBayesModel& model,
                                        double delta,
                                        const MinerOptions& options) {
  const std::uint64_t size = SearchSpaceSize(model.schema());
  if (size > options.brute_force_cap) {
    throw Error(ErrorCode::kCapExceeded,
                "brute force would enumerate " + std::to_string(size) +
                    " patterns (cap " +
                    std::to_string(options.brute_force_cap) + ")");
  }
  std::vector<Pattern> out;
  out.reserve(size);
  Assignment x, y;
  Enumerate(model, delta, model.schema().features(), 0, x, y, out);
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

std::vector<Pattern> DiscriminatingPatterns(std::vector<Pattern> all,
                                            double delta) {
  std::erase_if(all, [delta](const Pattern& p) {
    return !IsDiscriminating(p.delta, delta);
  });
  return all;
}

std::vector<Pattern> TopK(std::vector<Pattern> patterns, int k,
                          Ranking ranking) {
  std::sort(patterns.begin(), patterns.end(),
            [ranking](const Pattern& a, const Pattern& b) {
              return RankedBefore(a, b, ranking);
            });
  if (static_cast<int>(patterns.size()) > k) patterns.resize(k);
  return patterns;
}

}  // namespace fairnb
