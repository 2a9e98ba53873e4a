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

#ifndef FAIRNB_SCHEMA_H_
#define FAIRNB_SCHEMA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairnb/assignment.h"

namespace fairnb {

struct Variable {
  std::string name;
  std::vector<std::string> values;  // categorical labels, size >= 2

  int cardinality() const { return static_cast<int>(values.size()); }

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Variables of a binary-decision naive Bayes network. Variable indices
// cover the decision variable too; `features()` lists the others in
// index order.
class Schema {
 public:
  Schema() = default;
  // Throws kInvalidSchema when: names repeat, a domain has < 2 values, the
  // decision is not binary, or the decision is marked sensitive.
  Schema(std::vector<Variable> variables, VarIndex decision,
         ValueIndex positive_value, std::vector<VarIndex> sensitive);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_features() const { return static_cast<int>(features_.size()); }
  const Variable& variable(VarIndex v) const { return variables_.at(v); }
  const std::vector<Variable>& variables() const { return variables_; }
  int cardinality(VarIndex v) const { return variables_.at(v).cardinality(); }

  VarIndex decision() const { return decision_; }
  ValueIndex positive_value() const { return positive_value_; }
  ValueIndex negative_value() const { return 1 - positive_value_; }

  const std::vector<VarIndex>& features() const { return features_; }
  const std::vector<VarIndex>& sensitive() const { return sensitive_; }
  bool IsSensitive(VarIndex v) const;
  bool IsFeature(VarIndex v) const {
    return v >= 0 && v < num_variables() && v != decision_;
  }

  std::optional<VarIndex> FindVariable(std::string_view name) const;
  std::optional<ValueIndex> FindValue(VarIndex v, std::string_view label) const;

  // Checks bounds and domains of every binding. Throws kInvalidSchema.
  void ValidateAssignment(const Assignment& a) const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<Variable> variables_;
  VarIndex decision_ = 0;
  ValueIndex positive_value_ = 0;
  std::vector<VarIndex> sensitive_;
  std::vector<VarIndex> features_;
  std::vector<char> is_sensitive_;
};

// Human-readable rendering such as "{X=x, Y1=y1}".
std::string FormatAssignment(const Schema& schema, const Assignment& a);

}  // namespace fairnb

#endif  // FAIRNB_SCHEMA_H_
