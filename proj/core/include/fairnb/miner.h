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

// Branch-and-bound search for discrimination patterns.
//
// Every feature is visited once along a fixed branching order. At each depth
// the variable is bound into x (if sensitive), bound into y, or skipped; a
// skipped variable stays excluded for the whole subtree, so each (x, y) pair
// is reached at most once.

#ifndef FAIRNB_MINER_H_
#define FAIRNB_MINER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fairnb/model.h"
#include "fairnb/pattern.h"

namespace fairnb {

struct MinerOptions {
  // Permutation of the model's features. Empty selects DefaultBranchingOrder.
  std::vector<VarIndex> branching_order;
  // Refuse brute-force enumeration above this many candidates.
  std::uint64_t brute_force_cap = 10'000'000;
};

struct MiningReport {
  std::vector<Pattern> patterns;  // ranked; canonical order for MineAll
  // Candidates with nonempty x that were scored.
  std::uint64_t nodes_visited = 0;
  // Subtrees cut by a bound.
  std::uint64_t nodes_pruned = 0;
  std::uint64_t search_space_size = 0;
  bool certified_fair = false;

  double delta = 0.0;
  std::optional<int> k;
  std::optional<Ranking> ranking;
  std::vector<VarIndex> branching_order;

  double ExploredFraction() const;
};

// Features by decreasing spread max_z lr - min_z lr, index order on ties.
std::vector<VarIndex> DefaultBranchingOrder(const NaiveBayesModel& model);

// Every pattern with |Delta| > delta, in canonical order.
MiningReport MineAll(const NaiveBayesModel& model, double delta,
                     const MinerOptions& options = {});

// The k best patterns with |Delta| > delta under `ranking`.
MiningReport MineTopK(const NaiveBayesModel& model, double delta, int k,
                      Ranking ranking, const MinerOptions& options = {});

struct VerifyResult {
  bool fair = true;
  std::optional<Pattern> witness;
  std::uint64_t nodes_visited = 0;
};

// Stops at the first discrimination pattern found.
VerifyResult VerifyFair(const NaiveBayesModel& model, double delta,
                        const MinerOptions& options = {});

// Every candidate (x, y) with nonempty x, scored, in canonical order.
// Throws kCapExceeded (message carries the size) above options.brute_force_cap.
std::vector<Pattern> BruteForcePatterns(const NaiveBayesModel& model,
                                        double delta,
                                        const MinerOptions& options = {});

// Filters `all` down to patterns with |Delta| > delta.
std::vector<Pattern> DiscriminatingPatterns(std::vector<Pattern> all,
                                            double delta);

// The first k of `patterns` under `ranking`.
std::vector<Pattern> TopK(std::vector<Pattern> patterns, int k,
                          Ranking ranking);

}  // namespace fairnb

#endif  // FAIRNB_MINER_H_
