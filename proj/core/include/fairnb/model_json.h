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

#ifndef FAIRNB_MODEL_JSON_H_
#define FAIRNB_MODEL_JSON_H_

#include <string>

#include "fairnb/model.h"
#include "json.hpp"

namespace fairnb {

using Json = nlohmann::ordered_json;

// {"variables": [{"name", "values"}], "decision", "positive", "sensitive"}
Json SchemaToJson(const Schema& schema);
Schema SchemaFromJson(const Json& j);

// {"schema": ..., "prior": theta_d,
//  "cpts": {"<feature>": {"positive": [...], "negative": [...]}}}
// Doubles are written with round-trip precision.
Json ModelToJson(const NaiveBayesModel& model);
NaiveBayesModel ModelFromJson(const Json& j);

// {"X": "x", ...} keyed by variable name and value label.
Json AssignmentToJson(const Schema& schema, const Assignment& a);
Assignment AssignmentFromJson(const Schema& schema, const Json& j);

NaiveBayesModel LoadModel(const std::string& path);
void SaveJson(const Json& j, const std::string& path);
Json LoadJson(const std::string& path);

}  // namespace fairnb

#endif  // FAIRNB_MODEL_JSON_H_
