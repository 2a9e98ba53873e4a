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

// JSON and CSV renderings of library results. Every field is deterministic
// except the optional per-iteration timings of a learn report.

#ifndef FAIRNB_REPORT_JSON_H_
#define FAIRNB_REPORT_JSON_H_

#include <string>
#include <vector>

#include "fairnb/dataset.h"
#include "fairnb/evaluation.h"
#include "fairnb/learner.h"
#include "fairnb/miner.h"
#include "fairnb/model_json.h"

namespace fairnb {

// {"x", "y", "delta", "abs_delta", "divergence", "mass"}
Json PatternToJson(const Schema& schema, const Pattern& p);

Json MiningReportToJson(const Schema& schema, const MiningReport& report);

Json VerifyResultToJson(const Schema& schema, const VerifyResult& result,
                        double delta);

Json LearnReportToJson(const LearnReport& report, bool include_timing = false);

Json CrossValidationToJson(const CrossValidation& cv);

Json ProvenanceToJson(const Provenance& provenance);

// Columns x, y, delta, divergence, mass in the given order.
std::string PatternsCsv(const Schema& schema,
                        const std::vector<Pattern>& patterns);

// One row per pattern: x, y, mass, abs_delta, divergence, then whether the
// pattern is in the top k by discrimination and by divergence.
std::string ScatterCsv(const Schema& schema, const std::vector<Pattern>& all,
                       int k);

}  // namespace fairnb

#endif  // FAIRNB_REPORT_JSON_H_
