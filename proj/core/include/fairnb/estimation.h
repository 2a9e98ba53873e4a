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

#ifndef FAIRNB_ESTIMATION_H_
#define FAIRNB_ESTIMATION_H_

#include "fairnb/model.h"
#include "fairnb/statistics.h"

namespace fairnb {

// Laplace-smoothed maximum likelihood:
//   theta_{z|d} = (n_{z,d} + alpha) / (n_d + alpha |dom Z|),
//   theta_d = (n_d + alpha) / (N + 2 alpha).
// Throws kInvalidArgument for alpha < 0 and kMustSmooth when alpha == 0
// and some count is zero.
NaiveBayesModel Fit(const Schema& schema, const SufficientStatistics& counts,
                    double alpha);

}  // namespace fairnb

#endif  // FAIRNB_ESTIMATION_H_
