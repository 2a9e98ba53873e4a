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

#include "fairnb/schema.h"

#include <algorithm>
#include <set>

#include "fairnb/error.h"

namespace fairnb {

Schema::Schema(std::vector<Variable> variables, VarIndex decision,
               ValueIndex positive_value, std::vector<VarIndex> sensitive)
    : variables_(std::move(variables)),
      decision_(decision),
      positive_value_(positive_value),
      sensitive_(std::move(sensitive)) {
  const int n = num_variables();
  if (decision_ < 0 || decision_ >= n) {
    throw Error(ErrorCode::kInvalidSchema, "decision index out of range");
  }
  std::set<std::string> names;
  for (const Variable& v : variables_) {
    if (v.values.size() < 2) {
      throw Error(ErrorCode::kInvalidSchema,
                  "variable '" + v.name + "' has fewer than two values");
    }
    if (!names.insert(v.name).second) {
      throw Error(ErrorCode::kInvalidSchema,
                  "duplicate variable name '" + v.name + "'");
    }
    std::set<std::string> labels(v.values.begin(), v.values.end());
    if (labels.size() != v.values.size()) {
      throw Error(ErrorCode::kInvalidSchema,
                  "variable '" + v.name + "' has duplicate value labels");
    }
  }
  if (variables_[decision_].cardinality() != 2) {
    throw Error(ErrorCode::kInvalidSchema, "decision variable must be binary");
  }
  if (positive_value_ != 0 && positive_value_ != 1) {
    throw Error(ErrorCode::kInvalidSchema, "positive value must be 0 or 1");
  }
  std::sort(sensitive_.begin(), sensitive_.end());
  sensitive_.erase(std::unique(sensitive_.begin(), sensitive_.end()),
                   sensitive_.end());
  is_sensitive_.assign(n, 0);
  for (VarIndex s : sensitive_) {
    if (s < 0 || s >= n) {
      throw Error(ErrorCode::kInvalidSchema, "sensitive index out of range");
    }
    if (s == decision_) {
      throw Error(ErrorCode::kInvalidSchema,
                  "decision variable cannot be sensitive");
    }
    is_sensitive_[s] = 1;
  }
  for (VarIndex v = 0; v < n; ++v) {
    if (v != decision_) features_.push_back(v);
  }
}

bool Schema::IsSensitive(VarIndex v) const {
  return v >= 0 && v < num_variables() && is_sensitive_[v] != 0;
}

std::optional<VarIndex> Schema::FindVariable(std::string_view name) const {
  for (VarIndex v = 0; v < num_variables(); ++v) {
    if (variables_[v].name == name) return v;
  }
  return std::nullopt;
}

std::optional<ValueIndex> Schema::FindValue(VarIndex v,
                                            std::string_view label) const {
  const auto& values = variables_.at(v).values;
  for (ValueIndex i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[i] == label) return i;
  }
  return std::nullopt;
}

void Schema::ValidateAssignment(const Assignment& a) const {
  for (const Binding& b : a) {
    if (b.var < 0 || b.var >= num_variables()) {
      throw Error(
          ErrorCode::kInvalidSchema,
          "assignment references unknown variable " + std::to_string(b.var));
    }
    if (b.value < 0 || b.value >= cardinality(b.var)) {
      throw Error(
          ErrorCode::kInvalidSchema,
          "value out of domain for variable '" + variables_[b.var].name + "'");
    }
  }
}

std::string FormatAssignment(const Schema& schema, const Assignment& a) {
  std::string out = "{";
  bool first = true;
  for (const Binding& b : a) {
    if (!first) out += ", ";
    first = false;
    const Variable& v = schema.variable(b.var);
    out += v.name + "=" + v.values.at(b.value);
  }
  out += "}";
  return out;
}

}  // namespace fairnb
