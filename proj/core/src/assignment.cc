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

#include "fairnb/assignment.h"

#include <algorithm>
#include <string>

#include "fairnb/error.h"

namespace fairnb {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidModel:
      return "invalid-model";
    case ErrorCode::kInvalidSchema:
      return "invalid-schema";
    case ErrorCode::kInvalidQuery:
      return "invalid-query";
    case ErrorCode::kInvalidPattern:
      return "invalid-pattern";
    case ErrorCode::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorCode::kUndefinedQuery:
      return "undefined-query";
    case ErrorCode::kInvalidInterval:
      return "invalid-interval";
    case ErrorCode::kDegeneratePattern:
      return "degenerate-pattern";
    case ErrorCode::kCapExceeded:
      return "cap-exceeded";
    case ErrorCode::kInvalidInit:
      return "invalid-init";
    case ErrorCode::kUnsupportedThreshold:
      return "unsupported-threshold";
    case ErrorCode::kMustSmooth:
      return "must-smooth";
    case ErrorCode::kIngestion:
      return "ingestion";
    case ErrorCode::kInvalidFolds:
      return "invalid-folds";
    case ErrorCode::kSolverFailure:
      return "solver-failure";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
  }
  return "unknown";
}

Assignment::Assignment(std::initializer_list<Binding> bindings) {
  for (const Binding& b : bindings) Bind(b.var, b.value);
}

void Assignment::Bind(VarIndex var, ValueIndex value) {
  auto it =
      std::lower_bound(bindings_.begin(), bindings_.end(), var,
                       [](const Binding& b, VarIndex v) { return b.var < v; });
  if (it != bindings_.end() && it->var == var) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable " + std::to_string(var) + " bound twice");
  }
  bindings_.insert(it, Binding{var, value});
}

Assignment Assignment::With(VarIndex var, ValueIndex value) const {
  Assignment out = *this;
  out.Bind(var, value);
  return out;
}

void Assignment::Unbind(VarIndex var) {
  std::erase_if(bindings_, [var](const Binding& b) { return b.var == var; });
}

bool Assignment::Contains(VarIndex var) const {
  return ValueOf(var).has_value();
}

std::optional<ValueIndex> Assignment::ValueOf(VarIndex var) const {
  auto it =
      std::lower_bound(bindings_.begin(), bindings_.end(), var,
                       [](const Binding& b, VarIndex v) { return b.var < v; });
  if (it != bindings_.end() && it->var == var) return it->value;
  return std::nullopt;
}

bool Assignment::SharesVariableWith(const Assignment& other) const {
  auto a = bindings_.begin();
  auto b = other.bindings_.begin();
  while (a != bindings_.end() && b != other.bindings_.end()) {
    if (a->var == b->var) return true;
    if (a->var < b->var) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

Assignment Assignment::Union(const Assignment& a, const Assignment& b) {
  if (a.SharesVariableWith(b)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot union assignments that share a variable");
  }
  Assignment out;
  out.bindings_.reserve(a.size() + b.size());
  std::merge(a.bindings_.begin(), a.bindings_.end(), b.bindings_.begin(),
             b.bindings_.end(), std::back_inserter(out.bindings_));
  return out;
}

}  // namespace fairnb
